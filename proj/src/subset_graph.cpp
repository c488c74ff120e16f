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

#include "usg/subset_graph.hpp"

#include <algorithm>

namespace usg {

namespace {

void enumerate_rec(int n, int k, int next, std::uint64_t acc, int taken,
                   std::vector<SubsetVertex>& out) {
  if (taken == k) {
    out.emplace_back(acc);
    return;
  }
  for (int e = next; e <= n - (k - taken) + 1; ++e) {
    enumerate_rec(n, k, e + 1, acc | (std::uint64_t{1} << (e - 1)), taken + 1,
                  out);
  }
}

void check_order(const GraphParams& params) {
  if (binomial(params.n, params.k) > kMaxVertices) {
    throw Error(ErrorKind::capacity, "C(" + std::to_string(params.n) + "," +
                                         std::to_string(params.k) +
                                         ") vertices exceed the build limit");
  }
}

}  // namespace

std::vector<SubsetVertex> enumerate_vertices(const GraphParams& params) {
  params.validate();
  check_order(params);
  std::vector<SubsetVertex> out;
  out.reserve(binomial(params.n, params.k));
  enumerate_rec(params.n, params.k, 1, 0, 0, out);
  return out;
}

UniformSubsetGraph build_graph(const GraphParams& params) {
  UniformSubsetGraph g;
  g.params_ = params;
  g.vertices_ = enumerate_vertices(params);
  const std::size_t order = g.vertices_.size();
  g.index_.reserve(order * 2);
  for (Rank r = 0; r < order; ++r) g.index_.emplace(g.vertices_[r].bits(), r);
  g.adjacency_.assign(order, {});

  if (params.johnson()) {
    // Neighbors are exactly the single-entry exchanges.
    const std::uint64_t full = ground_set(params.n).bits();
    for (Rank r = 0; r < order; ++r) {
      const std::uint64_t x = g.vertices_[r].bits();
      auto& adj = g.adjacency_[r];
      for (std::uint64_t in = x; in != 0; in &= in - 1) {
        const std::uint64_t out_bit = in & (~in + 1);
        for (std::uint64_t free = full & ~x; free != 0; free &= free - 1) {
          const std::uint64_t in_bit = free & (~free + 1);
          adj.push_back(g.index_.at((x ^ out_bit) | in_bit));
        }
      }
      std::sort(adj.begin(), adj.end());
    }
  } else {
    for (Rank a = 0; a < order; ++a) {
      for (Rank b = a + 1; b < order; ++b) {
        if (std::popcount(g.vertices_[a].bits() & g.vertices_[b].bits()) ==
            params.t) {
          g.adjacency_[a].push_back(b);
          g.adjacency_[b].push_back(a);
        }
      }
    }
  }
  std::size_t deg_sum = 0;
  for (const auto& adj : g.adjacency_) deg_sum += adj.size();
  g.edge_count_ = deg_sum / 2;
  return g;
}

std::size_t UniformSubsetGraph::min_degree() const noexcept {
  std::size_t best = order() == 0 ? 0 : adjacency_[0].size();
  for (const auto& adj : adjacency_) best = std::min(best, adj.size());
  return best;
}

bool UniformSubsetGraph::adjacent(Rank a, Rank b) const {
  const auto& adj = adjacency_.at(a);
  return std::binary_search(adj.begin(), adj.end(), b);
}

std::optional<Rank> UniformSubsetGraph::rank_of(SubsetVertex v) const {
  const auto it = index_.find(v.bits());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Rank UniformSubsetGraph::rank(SubsetVertex v) const {
  if (auto r = rank_of(v)) return *r;
  throw Error(ErrorKind::invalid_vertex,
              v.to_string() + " is not a vertex of G(" +
                  std::to_string(params_.n) + "," + std::to_string(params_.k) +
                  "," + std::to_string(params_.t) + ")");
}

std::vector<Rank> vertices_containing_entry(const UniformSubsetGraph& g,
                                            Entry r) {
  if (r < 1 || r > g.params().n) {
    throw Error(ErrorKind::invalid_entry,
                "entry " + std::to_string(r) + " outside [1," +
                    std::to_string(g.params().n) + "]");
  }
  std::vector<Rank> out;
  const auto verts = g.vertices();
  for (Rank i = 0; i < verts.size(); ++i) {
    if (verts[i].contains(r)) out.push_back(i);
  }
  return out;
}

bool is_isomorphism(const UniformSubsetGraph& from,
                    const UniformSubsetGraph& to, const VertexMap& map) {
  const std::size_t order = from.order();
  if (to.order() != order || map.image.size() != order ||
      to.edge_count() != from.edge_count()) {
    return false;
  }
  std::vector<char> hit(order, 0);
  for (Rank img : map.image) {
    if (img >= order || hit[img]) return false;
    hit[img] = 1;
  }
  // Edge counts match and the map is a bijection, so mapping every edge to
  // an edge also rules out non-edges mapping to edges.
  for (Rank a = 0; a < order; ++a) {
    for (Rank b : from.neighbors(a)) {
      if (!to.adjacent(map.image[a], map.image[b])) return false;
    }
  }
  return true;
}

EntryDeletion delete_entry_subgraph(const UniformSubsetGraph& g, Entry r) {
  const GraphParams& p = g.params();
  if (r < 1 || r > p.n) {
    throw Error(ErrorKind::invalid_entry, "entry " + std::to_string(r));
  }
  if (p.n < p.k + 1) {
    throw Error(ErrorKind::invalid_params, "deleting an entry needs n >= k+1");
  }
  EntryDeletion out{build_graph({p.n - 1, p.k, p.t}), {}, {}};
  const std::uint64_t low = (std::uint64_t{1} << (r - 1)) - 1;
  for (Rank i = 0; i < g.order(); ++i) {
    const std::uint64_t bits = g.vertex(i).bits();
    if ((bits >> (r - 1)) & 1U) continue;
    const std::uint64_t relabeled = (bits & low) | ((bits >> 1) & ~low);
    out.survivors.push_back(i);
    out.to_reduced.image.push_back(out.graph.rank(SubsetVertex(relabeled)));
  }
  return out;
}

VertexMap complement_isomorphism(const UniformSubsetGraph& g,
                                 const UniformSubsetGraph& target) {
  const GraphParams& p = g.params();
  if (!p.johnson()) {
    throw Error(ErrorKind::unsupported,
                "complementation is an isomorphism only for Johnson graphs");
  }
  const GraphParams& q = target.params();
  if (q.n != p.n || q.k != p.n - p.k || !q.johnson()) {
    throw Error(ErrorKind::invalid_params, "target must be J(n,n-k)");
  }
  const std::uint64_t full = ground_set(p.n).bits();
  VertexMap map;
  map.image.reserve(g.order());
  for (SubsetVertex v : g.vertices()) {
    map.image.push_back(target.rank(SubsetVertex(full & ~v.bits())));
  }
  return map;
}

}  // namespace usg
