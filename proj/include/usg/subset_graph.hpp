// Copyright 2026 The usg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "usg/subset.hpp"

namespace usg {

// Upper bound on C(n,k) accepted by build_graph.
inline constexpr std::uint64_t kMaxVertices = std::uint64_t{1} << 22;

/// All C(n,k) k-subsets of [n] in strictly increasing lexicographic order.
/// The position of a subset in this list is its canonical rank.
std::vector<SubsetVertex> enumerate_vertices(const GraphParams& params);

/// Immutable uniform subset graph G(n,k,t): vertices are the k-subsets of
/// [n] in canonical order, u ~ v iff |u ∩ v| = t.
class UniformSubsetGraph {
 public:
  const GraphParams& params() const noexcept { return params_; }
  std::size_t order() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const SubsetVertex> vertices() const noexcept { return vertices_; }
  SubsetVertex vertex(Rank r) const { return vertices_.at(r); }
  std::span<const Rank> neighbors(Rank r) const { return adjacency_.at(r); }
  std::size_t degree(Rank r) const { return adjacency_.at(r).size(); }
  std::size_t min_degree() const noexcept;
  bool adjacent(Rank a, Rank b) const;
  bool complete() const noexcept {
    return order() <= 1 || edge_count_ == order() * (order() - 1) / 2;
  }

  std::optional<Rank> rank_of(SubsetVertex v) const;
  // Throws invalid_vertex if v is not a vertex of this graph.
  Rank rank(SubsetVertex v) const;

  friend UniformSubsetGraph build_graph(const GraphParams& params);

 private:
  GraphParams params_;
  std::vector<SubsetVertex> vertices_;
  std::vector<std::vector<Rank>> adjacency_;
  std::unordered_map<std::uint64_t, Rank> index_;
  std::size_t edge_count_ = 0;
};

UniformSubsetGraph build_graph(const GraphParams& params);

/// β_r: ranks of the C(n-1,k-1) vertices containing entry r, ascending.
std::vector<Rank> vertices_containing_entry(const UniformSubsetGraph& g,
                                            Entry r);

// A vertex bijection between two graphs: image[rank in source] = rank in
// target.
struct VertexMap {
  std::vector<Rank> image;
};

/// True iff `map` is a bijection that preserves edges and non-edges.
bool is_isomorphism(const UniformSubsetGraph& from,
                    const UniformSubsetGraph& to, const VertexMap& map);

struct EntryDeletion {
  UniformSubsetGraph graph;       // G(n-1,k,t) built over the relabeled set
  std::vector<Rank> survivors;    // ranks in the source, ascending
  VertexMap to_reduced;           // survivors[i] -> rank in `graph`
};

/// G − β_r relabeled over [n-1] (entries above r shift down by one).
EntryDeletion delete_entry_subgraph(const UniformSubsetGraph& g, Entry r);

/// x ↦ [n] − x from J(n,k) onto J(n,n-k). Johnson mode only.
VertexMap complement_isomorphism(const UniformSubsetGraph& g,
                                 const UniformSubsetGraph& target);

}  // namespace usg
