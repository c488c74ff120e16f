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

#include "usg/connectivity.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <thread>

#include "usg/flow.hpp"

namespace usg {

namespace {

using Clock = std::chrono::steady_clock;
using Mask = std::uint64_t;

void require_nondegenerate(const UniformSubsetGraph& g) {
  if (g.params().n == g.params().k) {
    throw Error(ErrorKind::degenerate_graph,
                "J(n,n) is a single isolated vertex");
  }
}

void require_connected(const UniformSubsetGraph& g) {
  if (!is_connected(g)) {
    throw Error(ErrorKind::not_connected, "graph is disconnected");
  }
}

Mask low_mask(std::size_t count) {
  return count >= 64 ? ~Mask{0} : (Mask{1} << count) - 1;
}

std::vector<Mask> adjacency_masks(const UniformSubsetGraph& g) {
  std::vector<Mask> adj(g.order(), 0);
  for (Rank v = 0; v < g.order(); ++v) {
    for (Rank w : g.neighbors(v)) adj[v] |= Mask{1} << w;
  }
  return adj;
}

Mask flood(const std::vector<Mask>& adj, Mask alive, Mask seed) {
  Mask reached = seed;
  Mask frontier = seed;
  while (frontier != 0) {
    Mask next = 0;
    for (Mask f = frontier; f != 0; f &= f - 1) {
      next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
    }
    next &= alive & ~reached;
    reached |= next;
    frontier = next;
  }
  return reached;
}

bool mask_is_super(const std::vector<Mask>& adj, Mask full, Mask cut) {
  const Mask alive = full & ~cut;
  if (alive == 0) return false;
  if (flood(adj, alive, alive & (~alive + 1)) == alive) return false;
  for (Mask a = alive; a != 0; a &= a - 1) {
    if ((adj[static_cast<std::size_t>(std::countr_zero(a))] & alive) == 0) {
      return false;
    }
  }
  return true;
}

// Vertex-cut in the wide sense: G − S disconnected or a single vertex.
bool mask_is_vertex_cut(const std::vector<Mask>& adj, Mask full, Mask cut) {
  const Mask alive = full & ~cut;
  if (alive == 0) return false;
  if (std::popcount(alive) == 1) return true;
  return flood(adj, alive, alive & (~alive + 1)) != alive;
}

// Gosper's hack over all `size`-subsets of `count` bits.
template <typename Fn>
std::uint64_t for_each_subset(std::size_t count, std::size_t size, Fn&& fn) {
  // count <= 63, so the limit bit always fits.
  if (size > count) return 0;
  if (size == 0) {
    fn(Mask{0});
    return 1;
  }
  const Mask limit = Mask{1} << count;
  std::uint64_t seen = 0;
  for (Mask s = low_mask(size); s < limit;) {
    ++seen;
    if (!fn(s)) break;
    const Mask c = s & (~s + 1);
    const Mask r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return seen;
}

bool mask_lex_less(Mask a, Mask b) {
  return SubsetVertex(a) < SubsetVertex(b);
}

VertexCut mask_to_cut(Mask m) {
  VertexCut cut;
  for (Mask b = m; b != 0; b &= b - 1) {
    cut.removed.push_back(static_cast<Rank>(std::countr_zero(b)));
  }
  return cut;
}

void check_oracle_size(const UniformSubsetGraph& g, const OracleOptions& opts) {
  if (g.order() > opts.max_vertices || g.order() > 63) {
    throw Error(ErrorKind::too_large,
                std::to_string(g.order()) + " vertices exceed the oracle cap " +
                    std::to_string(std::min<std::size_t>(opts.max_vertices,
                                                         63)) +
                    "; use super_connectivity_exact");
  }
}

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::formula: return "formula";
    case Method::flow_search: return "flow-search";
    case Method::oracle: return "oracle";
  }
  return "unknown";
}

std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::exact: return "exact";
    case SearchStatus::infinite: return "infinite";
    case SearchStatus::budget_exceeded: return "budget-exceeded";
    case SearchStatus::no_cut_found: return "no-cut-found";
  }
  return "unknown";
}

VertexCut VertexCut::from_ranks(std::vector<Rank> ranks) {
  std::sort(ranks.begin(), ranks.end());
  ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
  return VertexCut{std::move(ranks)};
}

bool lex_less(const VertexCut& a, const VertexCut& b) {
  return std::lexicographical_compare(a.removed.begin(), a.removed.end(),
                                      b.removed.begin(), b.removed.end());
}

bool is_connected(const UniformSubsetGraph& g) {
  if (g.order() == 0) return false;
  return components(g, VertexCut{}).size() == 1;
}

std::vector<std::vector<Rank>> components(const UniformSubsetGraph& g,
                                          const VertexCut& removed) {
  std::vector<char> gone(g.order(), 0);
  for (Rank r : removed.removed) {
    if (r >= g.order()) {
      throw Error(ErrorKind::rank_range, "rank " + std::to_string(r));
    }
    gone[r] = 1;
  }
  std::vector<std::vector<Rank>> comps;
  std::vector<Rank> stack;
  for (Rank start = 0; start < g.order(); ++start) {
    if (gone[start]) continue;
    std::vector<Rank> comp{start};
    gone[start] = 1;
    stack.assign(1, start);
    while (!stack.empty()) {
      const Rank v = stack.back();
      stack.pop_back();
      for (Rank w : g.neighbors(v)) {
        if (!gone[w]) {
          gone[w] = 1;
          comp.push_back(w);
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  if (comps.empty()) {
    throw Error(ErrorKind::empty_graph, "the cut removes every vertex");
  }
  return comps;
}

CutCertificate is_super_vertex_cut(const UniformSubsetGraph& g,
                                   const VertexCut& cut) {
  CutCertificate cert;
  cert.cut = VertexCut::from_ranks(cut.removed);
  cert.components = components(g, cert.cut);
  cert.min_component_order = cert.components.front().size();
  for (const auto& c : cert.components) {
    cert.min_component_order = std::min(cert.min_component_order, c.size());
  }
  cert.is_disconnecting = cert.components.size() >= 2;
  cert.is_super = cert.is_disconnecting && cert.min_component_order >= 2;
  return cert;
}

std::size_t local_vertex_connectivity(const UniformSubsetGraph& g, Rank s,
                                      Rank t) {
  return internally_disjoint_paths(g, s, t).size();
}

std::vector<std::vector<Rank>> internally_disjoint_paths(
    const UniformSubsetGraph& g, Rank s, Rank t) {
  if (s >= g.order() || t >= g.order()) {
    throw Error(ErrorKind::rank_range, "terminal out of range");
  }
  if (s == t || g.adjacent(s, t)) {
    throw Error(ErrorKind::adjacent_terminals,
                "terminals must be distinct and non-adjacent");
  }
  SplitFlowNetwork net(g);
  net.set_role(s, SplitFlowNetwork::Role::source);
  net.set_role(t, SplitFlowNetwork::Role::sink);
  net.run();
  return net.flow_paths();
}

GlobalConnectivity global_vertex_connectivity(const UniformSubsetGraph& g) {
  require_nondegenerate(g);
  require_connected(g);
  GlobalConnectivity out;
  if (g.complete()) {
    out.kappa = g.order() - 1;
    return out;
  }
  // Some vertex among the first κ+1 avoids a minimum cut, and it is
  // separated from every vertex on the far side.
  SplitFlowNetwork net(g);
  std::size_t best = g.min_degree();
  for (Rank s = 0; s < g.order() && s <= best; ++s) {
    for (Rank t = 0; t < g.order(); ++t) {
      if (t == s || g.adjacent(s, t)) continue;
      net.clear_roles();
      net.set_role(s, SplitFlowNetwork::Role::source);
      net.set_role(t, SplitFlowNetwork::Role::sink);
      const auto res = net.run(best);
      if (res.exceeded || res.inseparable) continue;
      VertexCut cut = VertexCut::from_ranks(net.source_side_cut());
      if (!out.witness || cut.size() < best ||
          (cut.size() == best && lex_less(cut, *out.witness))) {
        best = cut.size();
        out.witness = std::move(cut);
      }
    }
  }
  out.kappa = best;
  return out;
}

EdgePairSeparator min_edge_pair_separator(const UniformSubsetGraph& g, Edge e,
                                          Edge f) {
  const Rank ends[4] = {e.a, e.b, f.a, f.b};
  for (Rank r : ends) {
    if (r >= g.order()) throw Error(ErrorKind::rank_range, "edge endpoint");
  }
  if (!g.adjacent(e.a, e.b) || !g.adjacent(f.a, f.b)) {
    throw Error(ErrorKind::invalid_pair, "arguments must be edges");
  }
  if (e.a == f.a || e.a == f.b || e.b == f.a || e.b == f.b) {
    throw Error(ErrorKind::invalid_pair, "edges share an endpoint");
  }
  SplitFlowNetwork net(g);
  net.set_role(e.a, SplitFlowNetwork::Role::source);
  net.set_role(e.b, SplitFlowNetwork::Role::source);
  net.set_role(f.a, SplitFlowNetwork::Role::sink);
  net.set_role(f.b, SplitFlowNetwork::Role::sink);
  const auto res = net.run();
  EdgePairSeparator out;
  if (res.inseparable) {
    out.inseparable = true;
    return out;
  }
  out.cut = VertexCut::from_ranks(net.source_side_cut());
  return out;
}

namespace {

// Shared state of one κ′ flow search.
class SuperSearch {
 public:
  SuperSearch(const UniformSubsetGraph& g, const SearchOptions& opts)
      : g_(g), opts_(opts) {}

  void offer(VertexCut cut) {
    std::lock_guard lock(mu_);
    if (!best_ || cut.size() < best_->size() ||
        (cut.size() == best_->size() && lex_less(cut, *best_))) {
      best_ = std::move(cut);
      incumbent_.store(best_->size());
    }
  }

  void seed_with_edge_neighborhoods(const std::vector<Edge>& edges) {
    for (const Edge& e : edges) {
      std::vector<Rank> s;
      for (Rank w : g_.neighbors(e.a)) if (w != e.b) s.push_back(w);
      for (Rank w : g_.neighbors(e.b)) if (w != e.a) s.push_back(w);
      VertexCut cut = VertexCut::from_ranks(std::move(s));
      if (cut.size() + 4 > g_.order()) continue;
      if (is_super_vertex_cut(g_, cut).is_super) offer(std::move(cut));
    }
  }

  void run_pairs(const std::vector<std::pair<Edge, Edge>>& pairs) {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      SplitFlowNetwork net(g_);
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= pairs.size() || out_of_budget_.load()) break;
        search_pair(net, pairs[i].first, pairs[i].second);
      }
    };
    const unsigned workers = std::max(1U, opts_.workers);
    if (workers == 1) {
      worker();
      return;
    }
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  const std::optional<VertexCut>& best() const { return best_; }
  bool out_of_budget() const { return out_of_budget_.load(); }
  std::uint64_t nodes() const { return nodes_.load(); }

 private:
  struct Node {
    std::vector<Rank> forced_cut;
    std::vector<Rank> forced_keep;
  };

  void search_pair(SplitFlowNetwork& net, Edge e, Edge f) {
    using Role = SplitFlowNetwork::Role;
    std::vector<Node> stack(1);
    std::vector<char> in_cut(g_.order(), 0);
    while (!stack.empty()) {
      Node node = std::move(stack.back());
      stack.pop_back();
      if (nodes_.fetch_add(1) >= opts_.node_budget) {
        out_of_budget_.store(true);
        return;
      }
      const std::size_t incumbent = incumbent_.load();
      if (node.forced_cut.size() > incumbent) continue;
      net.clear_roles();
      for (Rank r : node.forced_cut) net.set_role(r, Role::removed);
      for (Rank r : node.forced_keep) net.set_role(r, Role::kept);
      net.set_role(e.a, Role::source);
      net.set_role(e.b, Role::source);
      net.set_role(f.a, Role::sink);
      net.set_role(f.b, Role::sink);
      const std::size_t limit =
          incumbent == SIZE_MAX ? SIZE_MAX : incumbent - node.forced_cut.size();
      const auto res = net.run(limit);
      if (res.inseparable || res.exceeded) continue;

      std::vector<Rank> cut = net.source_side_cut();
      cut.insert(cut.end(), node.forced_cut.begin(), node.forced_cut.end());
      std::fill(in_cut.begin(), in_cut.end(), 0);
      for (Rank r : cut) in_cut[r] = 1;

      // Lowest-ranked vertex left without a surviving neighbor.
      std::optional<Rank> isolated;
      for (Rank v = 0; v < g_.order() && !isolated; ++v) {
        if (in_cut[v]) continue;
        const auto nb = g_.neighbors(v);
        if (std::all_of(nb.begin(), nb.end(),
                        [&](Rank w) { return in_cut[w] != 0; })) {
          isolated = v;
        }
      }
      if (!isolated) {
        offer(VertexCut::from_ranks(std::move(cut)));
        continue;
      }
      const Rank w = *isolated;
      // Children: w joins the cut, or w survives together with its i-th
      // eligible neighbor while earlier neighbors join the cut. Pushed in
      // reverse so the stack pops them in this order.
      std::vector<Rank> eligible;
      for (Rank y : g_.neighbors(w)) {
        if (net.role(y) != Role::removed) eligible.push_back(y);
      }
      std::vector<Node> children;
      if (net.role(w) == Role::normal) {
        Node c = node;
        c.forced_cut.push_back(w);
        children.push_back(std::move(c));
      }
      for (std::size_t i = 0; i < eligible.size(); ++i) {
        Node c = node;
        c.forced_keep.push_back(w);
        c.forced_keep.push_back(eligible[i]);
        for (std::size_t j = 0; j < i; ++j) {
          if (net.role(eligible[j]) == Role::normal) {
            c.forced_cut.push_back(eligible[j]);
          }
        }
        children.push_back(std::move(c));
      }
      for (auto it = children.rbegin(); it != children.rend(); ++it) {
        stack.push_back(std::move(*it));
      }
    }
  }

  const UniformSubsetGraph& g_;
  SearchOptions opts_;
  std::mutex mu_;
  std::optional<VertexCut> best_;
  std::atomic<std::size_t> incumbent_{SIZE_MAX};
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> out_of_budget_{false};
};

}  // namespace

ConnectivityReport super_connectivity_exact(const UniformSubsetGraph& g,
                                            const SearchOptions& opts) {
  const auto start = Clock::now();
  require_nondegenerate(g);
  require_connected(g);
  ConnectivityReport rep;
  rep.method = Method::flow_search;
  const GlobalConnectivity kappa = global_vertex_connectivity(g);
  rep.kappa = kappa.kappa;
  rep.kappa_witness = kappa.witness;
  rep.lower_bound = kappa.kappa;

  std::vector<Edge> edges;
  for (Rank a = 0; a < g.order(); ++a) {
    for (Rank b : g.neighbors(a)) {
      if (a < b) edges.push_back({a, b});
    }
  }

  SuperSearch search(g, opts);
  search.seed_with_edge_neighborhoods(edges);

  // With an upper bound U, any cut of size <= U misses one of U+1
  // vertex-disjoint edges entirely, so those edges suffice as sources.
  std::vector<std::size_t> sources;
  if (search.best()) {
    const std::size_t want = search.best()->size() + 1;
    std::vector<char> used(g.order(), 0);
    for (std::size_t i = 0; i < edges.size() && sources.size() < want; ++i) {
      if (!used[edges[i].a] && !used[edges[i].b]) {
        used[edges[i].a] = used[edges[i].b] = 1;
        sources.push_back(i);
      }
    }
    if (sources.size() < want) sources.clear();
  }
  if (sources.empty()) {
    sources.resize(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) sources[i] = i;
  }

  std::vector<std::pair<std::size_t, std::size_t>> index_pairs;
  for (std::size_t i : sources) {
    const Edge& e = edges[i];
    for (std::size_t j = 0; j < edges.size(); ++j) {
      const Edge& f = edges[j];
      if (f.a == e.a || f.a == e.b || f.b == e.a || f.b == e.b) continue;
      if (g.adjacent(e.a, f.a) || g.adjacent(e.a, f.b) ||
          g.adjacent(e.b, f.a) || g.adjacent(e.b, f.b)) {
        continue;
      }
      index_pairs.emplace_back(std::min(i, j), std::max(i, j));
    }
  }
  std::sort(index_pairs.begin(), index_pairs.end());
  index_pairs.erase(std::unique(index_pairs.begin(), index_pairs.end()),
                    index_pairs.end());
  std::vector<std::pair<Edge, Edge>> pairs;
  pairs.reserve(index_pairs.size());
  for (auto [i, j] : index_pairs) pairs.emplace_back(edges[i], edges[j]);

  search.run_pairs(pairs);
  rep.nodes = search.nodes();
  if (search.best()) rep.upper_bound = search.best()->size();
  if (search.out_of_budget()) {
    rep.status = SearchStatus::budget_exceeded;
  } else if (search.best()) {
    rep.status = SearchStatus::exact;
    rep.kappa_prime = search.best()->size();
    rep.lower_bound = *rep.kappa_prime;
    rep.kappa_prime_witness = is_super_vertex_cut(g, *search.best());
  } else {
    rep.status = SearchStatus::no_cut_found;
  }
  rep.elapsed = Clock::now() - start;
  return rep;
}

ConnectivityReport super_cut_oracle(const UniformSubsetGraph& g,
                                    const OracleOptions& opts) {
  const auto start = Clock::now();
  require_nondegenerate(g);
  check_oracle_size(g, opts);
  require_connected(g);
  ConnectivityReport rep;
  rep.method = Method::oracle;
  const auto adj = adjacency_masks(g);
  const std::size_t order = g.order();
  const Mask full = low_mask(order);

  // κ: smallest S leaving a disconnected graph or a single vertex.
  if (g.complete()) {
    rep.kappa = order - 1;
  } else {
    for (std::size_t s = 0; s + 1 < order; ++s) {
      std::optional<Mask> best;
      rep.nodes += for_each_subset(order, s, [&](Mask m) {
        if (mask_is_vertex_cut(adj, full, m) &&
            (!best || mask_lex_less(m, *best))) {
          best = m;
        }
        return true;
      });
      if (best) {
        rep.kappa = s;
        rep.kappa_witness = mask_to_cut(*best);
        break;
      }
    }
  }

  const MinimumSuperCuts all = enumerate_minimum_super_cuts(g, opts);
  ExhaustionProof proof;
  proof.max_cut_size = all.size ? static_cast<int>(*all.size)
                                : static_cast<int>(order) - 4;
  for (int s = 0; s <= proof.max_cut_size; ++s) {
    proof.subsets_examined += binomial(static_cast<int>(order), s);
  }
  rep.nodes += proof.subsets_examined;
  if (all.size) {
    rep.status = SearchStatus::exact;
    rep.kappa_prime = *all.size;
    rep.kappa_prime_witness = is_super_vertex_cut(g, all.cuts.front());
    rep.lower_bound = *all.size;
    rep.upper_bound = *all.size;
  } else {
    rep.status = SearchStatus::infinite;
    rep.exhaustion = proof;
    rep.lower_bound = rep.kappa;
  }
  rep.elapsed = Clock::now() - start;
  return rep;
}

MinimumSuperCuts enumerate_minimum_super_cuts(const UniformSubsetGraph& g,
                                              const OracleOptions& opts) {
  require_nondegenerate(g);
  check_oracle_size(g, opts);
  const auto adj = adjacency_masks(g);
  const std::size_t order = g.order();
  const Mask full = low_mask(order);
  MinimumSuperCuts out;
  // Two components of order >= 2 must survive.
  for (std::size_t s = 0; s + 4 <= order; ++s) {
    std::vector<Mask> found;
    for_each_subset(order, s, [&](Mask m) {
      if (mask_is_super(adj, full, m)) found.push_back(m);
      return true;
    });
    if (!found.empty()) {
      std::sort(found.begin(), found.end(), mask_lex_less);
      out.size = s;
      for (Mask m : found) out.cuts.push_back(mask_to_cut(m));
      break;
    }
  }
  return out;
}

CutStructureReport min_cut_structure_check(const UniformSubsetGraph& g,
                                           std::uint64_t max_subsets) {
  require_nondegenerate(g);
  require_connected(g);
  CutStructureReport rep;
  const GlobalConnectivity kappa = global_vertex_connectivity(g);
  rep.kappa = kappa.kappa;
  if (g.complete()) return rep;
  if (g.order() > 63 ||
      binomial(static_cast<int>(g.order()), static_cast<int>(kappa.kappa)) >
          max_subsets) {
    throw Error(ErrorKind::too_large, "too many subsets of size kappa");
  }
  const auto adj = adjacency_masks(g);
  const Mask full = low_mask(g.order());
  rep.subsets_examined = for_each_subset(g.order(), kappa.kappa, [&](Mask m) {
    if (!mask_is_vertex_cut(adj, full, m)) return true;
    ++rep.minimum_cuts;
    const bool neighborhood =
        std::find(adj.begin(), adj.end(), m) != adj.end();
    if (!neighborhood) {
      rep.holds = false;
      rep.counterexamples.push_back(mask_to_cut(m));
    }
    return true;
  });
  return rep;
}

}  // namespace usg
