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

#include <cstdint>
#include <vector>

#include "usg/subset_graph.hpp"

namespace usg {

/// Unit vertex-capacity max-flow on the split graph of a UniformSubsetGraph.
/// Every vertex v becomes in(v) -> out(v) with capacity 1; every edge uv
/// becomes out(u) -> in(v) and out(v) -> in(u) with unbounded capacity.
/// The arc layout is built once; roles are reassigned per query, so one
/// network instance serves many separator queries on the same graph. Not
/// thread-safe: each worker owns its own instance.
class SplitFlowNetwork {
 public:
  enum class Role : std::uint8_t { normal, removed, kept, source, sink };

  struct Result {
    std::size_t value = 0;
    bool inseparable = false;  // an uncuttable source-sink path exists
    bool exceeded = false;     // stopped after value passed the limit
  };

  explicit SplitFlowNetwork(const UniformSubsetGraph& g);

  void clear_roles();
  void set_role(Rank v, Role role) { role_[v] = role; }
  Role role(Rank v) const { return role_[v]; }

  /// Augments until no path remains or the value exceeds `limit`.
  Result run(std::size_t limit = SIZE_MAX);

  /// Vertices on the minimum separator closest to the sources. Valid after
  /// a run that neither exceeded nor proved the pair inseparable.
  std::vector<Rank> source_side_cut() const;

  /// Internally disjoint source-sink paths read off the current flow.
  std::vector<std::vector<Rank>> flow_paths() const;

 private:
  static constexpr std::int32_t kInf = 1 << 29;

  std::uint32_t in_node(Rank v) const { return 2 * v; }
  std::uint32_t out_node(Rank v) const { return 2 * v + 1; }
  std::uint32_t add_arc(std::uint32_t from, std::uint32_t to);
  void load_capacities();
  std::vector<char> residual_reachable() const;

  std::size_t order_;
  std::uint32_t source_, sink_;
  // CSR arc storage; arc a and a^1 are mutual reverses.
  std::vector<std::uint32_t> first_arc_;  // per node, size nodes+1
  std::vector<std::uint32_t> arc_order_;  // arcs grouped by tail node
  std::vector<std::uint32_t> head_;
  std::vector<std::int32_t> residual_;
  std::vector<std::int32_t> capacity_;
  std::vector<std::uint32_t> vertex_arc_;  // in(v)->out(v)
  std::vector<std::uint32_t> source_arc_;  // S->out(v)
  std::vector<std::uint32_t> sink_arc_;    // in(v)->T
  std::vector<Role> role_;

  // Scratch for BFS.
  std::vector<std::uint32_t> parent_arc_;
  std::vector<std::uint32_t> queue_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
};

}  // namespace usg
