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

#include "usg/flow.hpp"

#include <algorithm>
#include <limits>

namespace usg {

SplitFlowNetwork::SplitFlowNetwork(const UniformSubsetGraph& g)
    : order_(g.order()),
      source_(static_cast<std::uint32_t>(2 * g.order())),
      sink_(static_cast<std::uint32_t>(2 * g.order() + 1)),
      role_(g.order(), Role::normal) {
  const std::size_t nodes = 2 * order_ + 2;
  std::vector<std::uint32_t> tails;
  auto arc = [&](std::uint32_t from, std::uint32_t to) {
    const auto id = static_cast<std::uint32_t>(head_.size());
    head_.push_back(to);
    tails.push_back(from);
    head_.push_back(from);
    tails.push_back(to);
    return id;
  };
  vertex_arc_.resize(order_);
  source_arc_.resize(order_);
  sink_arc_.resize(order_);
  for (Rank v = 0; v < order_; ++v) {
    vertex_arc_[v] = arc(in_node(v), out_node(v));
    source_arc_[v] = arc(source_, out_node(v));
    sink_arc_[v] = arc(in_node(v), sink_);
    for (Rank w : g.neighbors(v)) arc(out_node(v), in_node(w));
  }
  first_arc_.assign(nodes + 1, 0);
  for (std::uint32_t t : tails) ++first_arc_[t + 1];
  for (std::size_t i = 0; i < nodes; ++i) first_arc_[i + 1] += first_arc_[i];
  arc_order_.resize(tails.size());
  std::vector<std::uint32_t> fill(first_arc_.begin(), first_arc_.end() - 1);
  for (std::uint32_t a = 0; a < tails.size(); ++a) {
    arc_order_[fill[tails[a]]++] = a;
  }
  residual_.assign(head_.size(), 0);
  capacity_.assign(head_.size(), 0);
  parent_arc_.assign(nodes, 0);
  stamp_.assign(nodes, 0);
  queue_.reserve(nodes);
}

void SplitFlowNetwork::clear_roles() {
  std::fill(role_.begin(), role_.end(), Role::normal);
}

void SplitFlowNetwork::load_capacities() {
  // Edge arcs are unbounded forward; every reverse arc starts empty.
  for (std::size_t a = 0; a < capacity_.size(); a += 2) {
    capacity_[a] = kInf;
    capacity_[a + 1] = 0;
  }
  for (Rank v = 0; v < order_; ++v) {
    std::int32_t through = 1;
    switch (role_[v]) {
      case Role::normal: through = 1; break;
      case Role::removed: through = 0; break;
      default: through = kInf; break;
    }
    capacity_[vertex_arc_[v]] = through;
    capacity_[source_arc_[v]] = role_[v] == Role::source ? kInf : 0;
    capacity_[sink_arc_[v]] = role_[v] == Role::sink ? kInf : 0;
    if (role_[v] == Role::removed) {
      // A removed vertex must not relay flow in either direction.
      capacity_[source_arc_[v]] = 0;
      capacity_[sink_arc_[v]] = 0;
    }
  }
  residual_ = capacity_;
}

SplitFlowNetwork::Result SplitFlowNetwork::run(std::size_t limit) {
  load_capacities();
  Result result;
  for (;;) {
    ++epoch_;
    queue_.clear();
    queue_.push_back(source_);
    stamp_[source_] = epoch_;
    bool found = false;
    for (std::size_t qi = 0; qi < queue_.size() && !found; ++qi) {
      const std::uint32_t u = queue_[qi];
      for (std::uint32_t i = first_arc_[u]; i < first_arc_[u + 1]; ++i) {
        const std::uint32_t a = arc_order_[i];
        if (residual_[a] <= 0) continue;
        const std::uint32_t w = head_[a];
        if (stamp_[w] == epoch_) continue;
        stamp_[w] = epoch_;
        parent_arc_[w] = a;
        if (w == sink_) {
          found = true;
          break;
        }
        queue_.push_back(w);
      }
    }
    if (!found) return result;
    std::int32_t bottleneck = kInf;
    for (std::uint32_t w = sink_; w != source_; w = head_[parent_arc_[w] ^ 1]) {
      bottleneck = std::min(bottleneck, residual_[parent_arc_[w]]);
    }
    if (bottleneck >= kInf) {
      result.inseparable = true;
      return result;
    }
    for (std::uint32_t w = sink_; w != source_; w = head_[parent_arc_[w] ^ 1]) {
      residual_[parent_arc_[w]] -= bottleneck;
      residual_[parent_arc_[w] ^ 1] += bottleneck;
    }
    result.value += static_cast<std::size_t>(bottleneck);
    if (result.value > limit) {
      result.exceeded = true;
      return result;
    }
  }
}

std::vector<char> SplitFlowNetwork::residual_reachable() const {
  std::vector<char> seen(first_arc_.size() - 1, 0);
  std::vector<std::uint32_t> stack{source_};
  seen[source_] = 1;
  while (!stack.empty()) {
    const std::uint32_t u = stack.back();
    stack.pop_back();
    for (std::uint32_t i = first_arc_[u]; i < first_arc_[u + 1]; ++i) {
      const std::uint32_t a = arc_order_[i];
      if (residual_[a] > 0 && !seen[head_[a]]) {
        seen[head_[a]] = 1;
        stack.push_back(head_[a]);
      }
    }
  }
  return seen;
}

std::vector<Rank> SplitFlowNetwork::source_side_cut() const {
  const auto seen = residual_reachable();
  std::vector<Rank> cut;
  for (Rank v = 0; v < order_; ++v) {
    if (role_[v] == Role::normal && seen[in_node(v)] && !seen[out_node(v)]) {
      cut.push_back(v);
    }
  }
  return cut;
}

std::vector<std::vector<Rank>> SplitFlowNetwork::flow_paths() const {
  std::vector<std::int32_t> flow(head_.size(), 0);
  for (std::size_t a = 0; a < head_.size(); a += 2) {
    flow[a] = capacity_[a] - residual_[a];
  }
  std::vector<std::vector<Rank>> paths;
  for (;;) {
    // Follow positive flow from the super source to the super sink.
    std::vector<Rank> path;
    std::uint32_t u = source_;
    bool progressed = true;
    while (u != sink_ && progressed) {
      progressed = false;
      for (std::uint32_t i = first_arc_[u]; i < first_arc_[u + 1]; ++i) {
        const std::uint32_t a = arc_order_[i];
        if ((a & 1U) != 0 || flow[a] <= 0) continue;
        --flow[a];
        const std::uint32_t next = head_[a];
        if (next == sink_) {
          path.push_back(u / 2);
        } else if ((next & 1U) != 0) {
          path.push_back(next / 2);
        }
        u = next;
        progressed = true;
        break;
      }
    }
    if (u != sink_) break;
    paths.push_back(std::move(path));
  }
  return paths;
}

}  // namespace usg
