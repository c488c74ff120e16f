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

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "usg/subset_graph.hpp"

namespace usg {

/// A set of removed vertices, stored as ascending ranks.
struct VertexCut {
  std::vector<Rank> removed;

  std::size_t size() const noexcept { return removed.size(); }
  static VertexCut from_ranks(std::vector<Rank> ranks);  // sorts, dedups
  friend bool operator==(const VertexCut&, const VertexCut&) = default;
};

// Lexicographic order on the sorted rank sequences.
bool lex_less(const VertexCut& a, const VertexCut& b);

struct CutCertificate {
  VertexCut cut;
  // Components of G − S, each ascending, ordered by smallest member.
  std::vector<std::vector<Rank>> components;
  std::size_t min_component_order = 0;
  bool is_disconnecting = false;
  bool is_super = false;

  friend bool operator==(const CutCertificate&,
                         const CutCertificate&) = default;
};

struct Edge {
  Rank a = 0;
  Rank b = 0;
};

enum class Method { formula, flow_search, oracle };
std::string_view to_string(Method m);

enum class SearchStatus {
  exact,            // κ′ finite with certificate
  infinite,         // no super vertex-cut; oracle exhaustion only
  budget_exceeded,  // bounds only
  no_cut_found,     // flow search finished without a cut; INFINITY unproven
};
std::string_view to_string(SearchStatus s);

// Evidence that every vertex subset up to a size was examined.
struct ExhaustionProof {
  int max_cut_size = -1;
  std::uint64_t subsets_examined = 0;
};

struct ConnectivityReport {
  std::size_t kappa = 0;
  std::optional<VertexCut> kappa_witness;  // absent for complete graphs
  SearchStatus status = SearchStatus::no_cut_found;
  std::optional<std::size_t> kappa_prime;
  std::optional<CutCertificate> kappa_prime_witness;
  std::optional<ExhaustionProof> exhaustion;
  std::size_t lower_bound = 0;
  std::optional<std::size_t> upper_bound;
  Method method = Method::flow_search;
  std::uint64_t nodes = 0;
  std::chrono::nanoseconds elapsed{0};
};

struct SearchOptions {
  std::uint64_t node_budget = 10'000'000;
  unsigned workers = 1;
};

struct OracleOptions {
  std::size_t max_vertices = 24;
};

bool is_connected(const UniformSubsetGraph& g);

/// Connected components of G − removed. Throws empty_graph if nothing
/// survives.
std::vector<std::vector<Rank>> components(const UniformSubsetGraph& g,
                                          const VertexCut& removed);

CutCertificate is_super_vertex_cut(const UniformSubsetGraph& g,
                                   const VertexCut& cut);

/// Minimum number of vertices (other than s, t) separating s from t.
/// Throws adjacent_terminals when s ~ t.
std::size_t local_vertex_connectivity(const UniformSubsetGraph& g, Rank s,
                                      Rank t);

/// A maximum family of internally disjoint s–t paths, from the flow
/// decomposition. Each path runs s ... t.
std::vector<std::vector<Rank>> internally_disjoint_paths(
    const UniformSubsetGraph& g, Rank s, Rank t);

struct GlobalConnectivity {
  std::size_t kappa = 0;
  std::optional<VertexCut> witness;  // absent for complete graphs
};

/// κ(G). Complete graphs report |V|−1 without a witness.
GlobalConnectivity global_vertex_connectivity(const UniformSubsetGraph& g);

struct EdgePairSeparator {
  bool inseparable = false;
  VertexCut cut;
};

/// Minimum vertex set avoiding the four endpoints that separates the
/// endpoints of e from those of f.
EdgePairSeparator min_edge_pair_separator(const UniformSubsetGraph& g, Edge e,
                                          Edge f);

/// Exact κ′ by edge-pair separators with isolated-vertex branch and bound.
/// Never reports INFINITY.
ConnectivityReport super_connectivity_exact(const UniformSubsetGraph& g,
                                            const SearchOptions& opts = {});

/// Exhaustive κ and κ′ by increasing cut size.
ConnectivityReport super_cut_oracle(const UniformSubsetGraph& g,
                                    const OracleOptions& opts = {});

struct MinimumSuperCuts {
  std::optional<std::size_t> size;  // nullopt: no super vertex-cut exists
  std::vector<VertexCut> cuts;      // lexicographic order
};

/// Every super vertex-cut of minimum size, by exhaustion.
MinimumSuperCuts enumerate_minimum_super_cuts(const UniformSubsetGraph& g,
                                              const OracleOptions& opts = {});

struct CutStructureReport {
  bool holds = true;  // every minimum vertex-cut is some N(v)
  std::size_t kappa = 0;
  std::uint64_t subsets_examined = 0;
  std::size_t minimum_cuts = 0;
  std::vector<VertexCut> counterexamples;
};

/// Exhaustively checks that all minimum vertex-cuts are neighborhoods.
CutStructureReport min_cut_structure_check(
    const UniformSubsetGraph& g, std::uint64_t max_subsets = 20'000'000);

}  // namespace usg
