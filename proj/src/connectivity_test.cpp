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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "structural.hpp"
#include "usg/connectivity.hpp"
#include "usg/error.hpp"
#include "usg/formula.hpp"
#include "usg/witness.hpp"

namespace usg {
namespace {

using testing::brute_graph;

template <typename Fn>
ErrorKind kind_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::parse;
}

VertexCut cut_of(const UniformSubsetGraph& g,
                 std::initializer_list<SubsetVertex> vs) {
  std::vector<Rank> r;
  for (SubsetVertex v : vs) r.push_back(g.rank(v));
  return VertexCut::from_ranks(r);
}

VertexCut neighborhood(const UniformSubsetGraph& g, Rank v) {
  const auto nb = g.neighbors(v);
  return VertexCut::from_ranks({nb.begin(), nb.end()});
}

// Small connected graphs used for cross-checks.
std::vector<GraphParams> small_graphs() {
  std::vector<GraphParams> out;
  for (int n = 3; n <= 7; ++n) {
    for (int k = 1; k < n; ++k) {
      for (int t = 0; t < k; ++t) {
        const GraphParams p{n, k, t};
        if (binomial(n, k) > 21) continue;
        if (!is_connected(build_graph(p))) continue;
        out.push_back(p);
      }
    }
  }
  return out;
}

TEST_CASE("components") {
  const auto j52 = build_graph(johnson(5, 2));
  CHECK(components(j52, {}).size() == 1);
  CHECK(components(j52, {}).front().size() == 10);

  const auto j42 = build_graph(johnson(4, 2));
  const auto comps = components(j42, neighborhood(j42, j42.rank({1, 2})));
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<Rank>{j42.rank({1, 2})});
  CHECK(comps[1] == std::vector<Rank>{j42.rank({3, 4})});

  VertexCut all;
  for (Rank v = 0; v < j42.order(); ++v) all.removed.push_back(v);
  CHECK(kind_of([&] { components(j42, all); }) == ErrorKind::empty_graph);
  CHECK_FALSE(is_connected(build_graph({4, 2, 0})));
}

TEST_CASE("is_super_vertex_cut") {
  const auto j63 = build_graph(johnson(6, 3));
  for (Rank v = 0; v < j63.order(); ++v) {
    const CutCertificate c = is_super_vertex_cut(j63, neighborhood(j63, v));
    CHECK(c.is_disconnecting);
    CHECK_FALSE(c.is_super);
    CHECK(c.min_component_order == 1);
  }
  const auto j72 = build_graph(johnson(7, 2));
  const CutCertificate t1 = is_super_vertex_cut(j72, cut_jn2(j72, {1, 2, 3}));
  CHECK(t1.is_super);
  CHECK(t1.cut.size() == 12);
  const CutCertificate none = is_super_vertex_cut(j72, {});
  CHECK_FALSE(none.is_super);
  CHECK_FALSE(none.is_disconnecting);

  // Stored partitions are reproduced by components().
  CHECK(components(j72, t1.cut) == t1.components);
  for (const auto& c : t1.components) CHECK(c.size() >= 2);
}

TEST_CASE("local connectivity against enumeration") {
  const auto j42 = build_graph(johnson(4, 2));
  CHECK(local_vertex_connectivity(j42, j42.rank({1, 2}), j42.rank({3, 4})) == 4);
  CHECK(kind_of([&] { local_vertex_connectivity(j42, 0, 1); }) ==
        ErrorKind::adjacent_terminals);

  const auto j63 = build_graph(johnson(6, 3));
  for (Rank s = 0; s < j63.order(); ++s) {
    for (Rank t = s + 1; t < j63.order(); ++t) {
      if (!j63.adjacent(s, t)) CHECK(local_vertex_connectivity(j63, s, t) == 9);
    }
  }
  for (const GraphParams& p : small_graphs()) {
    if (binomial(p.n, p.k) > 15) continue;
    const auto g = build_graph(p);
    const auto ref = brute_graph(p.n, p.k, p.t);
    for (Rank s = 0; s < g.order(); ++s) {
      for (Rank t = s + 1; t < g.order(); ++t) {
        if (g.adjacent(s, t)) continue;
        CHECK(local_vertex_connectivity(g, s, t) ==
              static_cast<std::size_t>(
                  testing::brute_local_connectivity(ref, static_cast<int>(s),
                                                    static_cast<int>(t))));
      }
    }
  }
}

TEST_CASE("Menger paths from the flow decomposition") {
  for (const GraphParams& p : {johnson(6, 3), kneser(5, 2), johnson(7, 2),
                               GraphParams{7, 3, 1}}) {
    const auto g = build_graph(p);
    for (Rank s = 0; s < g.order(); s += 3) {
      for (Rank t = s + 1; t < g.order(); t += 2) {
        if (g.adjacent(s, t)) continue;
        const auto paths = internally_disjoint_paths(g, s, t);
        CHECK(paths.size() == local_vertex_connectivity(g, s, t));
        std::set<Rank> used;
        for (const auto& path : paths) {
          REQUIRE(path.size() >= 3);
          CHECK(path.front() == s);
          CHECK(path.back() == t);
          for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            CHECK(g.adjacent(path[i], path[i + 1]));
          }
          for (std::size_t i = 1; i + 1 < path.size(); ++i) {
            CHECK(used.insert(path[i]).second);
          }
        }
      }
    }
  }
}

TEST_CASE("global connectivity") {
  CHECK(global_vertex_connectivity(build_graph(johnson(6, 2))).kappa == 8);
  CHECK(global_vertex_connectivity(build_graph(johnson(7, 3))).kappa == 12);
  const auto k6 = global_vertex_connectivity(build_graph(johnson(6, 1)));
  CHECK(k6.kappa == 5);
  CHECK_FALSE(k6.witness.has_value());
  for (const GraphParams& p : small_graphs()) {
    const auto g = build_graph(p);
    const auto rep = global_vertex_connectivity(g);
    if (binomial(p.n, p.k) <= 15) {
      CHECK(rep.kappa == static_cast<std::size_t>(
                             testing::brute_connectivity(brute_graph(p.n, p.k, p.t))));
    }
    if (rep.witness) {
      CHECK(rep.witness->size() == rep.kappa);
      CHECK(components(g, *rep.witness).size() >= 2);
    }
  }
  for (int k = 2; k <= 4; ++k) {
    for (int n = k + 1; n <= 9; ++n) {
      CHECK(global_vertex_connectivity(build_graph(johnson(n, k))).kappa ==
            kappa_formula(n, k));
    }
  }
  CHECK(kind_of([] { global_vertex_connectivity(build_graph(johnson(4, 4))); }) ==
        ErrorKind::degenerate_graph);
  CHECK(kind_of([] { global_vertex_connectivity(build_graph({4, 2, 0})); }) ==
        ErrorKind::not_connected);
}

TEST_CASE("edge-pair separators") {
  const auto j62 = build_graph(johnson(6, 2));
  const Edge e{j62.rank({1, 2}), j62.rank({1, 3})};
  const Edge f{j62.rank({4, 5}), j62.rank({4, 6})};
  const EdgePairSeparator sep = min_edge_pair_separator(j62, e, f);
  CHECK_FALSE(sep.inseparable);
  CHECK(sep.cut.size() <= 9);
  // The cut separates the pairs.
  const auto comps = components(j62, sep.cut);
  for (const auto& c : comps) {
    const bool has_e = std::binary_search(c.begin(), c.end(), e.a);
    const bool has_f = std::binary_search(c.begin(), c.end(), f.a);
    CHECK_FALSE((has_e && has_f));
  }
  const auto k5 = build_graph(johnson(5, 1));
  CHECK(min_edge_pair_separator(k5, {0, 1}, {2, 3}).inseparable);
  CHECK(kind_of([&] { min_edge_pair_separator(k5, {0, 1}, {1, 2}); }) ==
        ErrorKind::invalid_pair);

  // Brute force on the octahedron: every disjoint pair of edges.
  const auto j42 = build_graph(johnson(4, 2));
  const auto ref = brute_graph(4, 2, 1);
  for (Rank a = 0; a < 6; ++a) {
    for (Rank b : j42.neighbors(a)) {
      if (b < a) continue;
      for (Rank c = 0; c < 6; ++c) {
        for (Rank d : j42.neighbors(c)) {
          if (d < c || c == a || c == b || d == a || d == b) continue;
          const auto s = min_edge_pair_separator(j42, {a, b}, {c, d});
          std::vector<int> pool;
          for (int v = 0; v < 6; ++v) {
            if (v != int(a) && v != int(b) && v != int(c) && v != int(d)) pool.push_back(v);
          }
          std::optional<int> best;
          for (int sz = 0; sz <= static_cast<int>(pool.size()) && !best; ++sz) {
            testing::for_each_choice(pool, sz, [&](const std::vector<int>& cut) {
              for (const auto& comp : testing::brute_components(ref, testing::mask_of(ref, cut))) {
                if (std::binary_search(comp.begin(), comp.end(), int(a)) &&
                    std::binary_search(comp.begin(), comp.end(), int(c))) {
                  return true;
                }
              }
              best = sz;
              return false;
            });
          }
          CHECK(s.inseparable == !best.has_value());
          if (best) CHECK(s.cut.size() == static_cast<std::size_t>(*best));
        }
      }
    }
  }
}

TEST_CASE("super connectivity by flow search") {
  struct Case { GraphParams p; std::size_t want; };
  for (const Case& c : {Case{johnson(6, 2), 9}, Case{johnson(6, 3), 12},
                        Case{johnson(7, 3), 17}, Case{johnson(7, 2), 12},
                        Case{kneser(5, 2), 4}}) {
    const auto g = build_graph(c.p);
    const auto rep = super_connectivity_exact(g);
    CHECK(rep.status == SearchStatus::exact);
    REQUIRE(rep.kappa_prime);
    CHECK(*rep.kappa_prime == c.want);
    REQUIRE(rep.kappa_prime_witness);
    CHECK(rep.kappa_prime_witness->is_super);
    CHECK(rep.kappa_prime_witness->cut.size() == c.want);
    CHECK(rep.kappa_prime_witness->components ==
          components(g, rep.kappa_prime_witness->cut));
    CHECK(*rep.kappa_prime > rep.kappa);
  }
  const auto j52 = super_connectivity_exact(build_graph(johnson(5, 2)));
  CHECK(j52.status == SearchStatus::no_cut_found);
  CHECK_FALSE(j52.kappa_prime.has_value());

  CHECK(kind_of([] { super_connectivity_exact(build_graph(johnson(3, 3))); }) ==
        ErrorKind::degenerate_graph);
  CHECK(kind_of([] { super_connectivity_exact(build_graph({4, 2, 0})); }) ==
        ErrorKind::not_connected);
}

TEST_CASE("flow search is deterministic across worker counts") {
  for (const GraphParams& p : {johnson(6, 3), johnson(7, 3), johnson(8, 2)}) {
    const auto g = build_graph(p);
    const auto one = super_connectivity_exact(g, {10'000'000, 1});
    for (unsigned w : {2u, 3u, 4u}) {
      const auto many = super_connectivity_exact(g, {10'000'000, w});
      CHECK(many.kappa_prime == one.kappa_prime);
      REQUIRE(many.kappa_prime_witness);
      CHECK(many.kappa_prime_witness->cut == one.kappa_prime_witness->cut);
    }
  }
}

TEST_CASE("node budget") {
  const auto rep = super_connectivity_exact(build_graph(johnson(7, 3)), {5, 1});
  CHECK(rep.status == SearchStatus::budget_exceeded);
  CHECK_FALSE(rep.kappa_prime.has_value());
  CHECK(rep.lower_bound <= 17);
  if (rep.upper_bound) CHECK(*rep.upper_bound >= 17);
}

TEST_CASE("oracle") {
  for (int n = 3; n <= 5; ++n) {
    const auto rep = super_cut_oracle(build_graph(johnson(n, 2)));
    CHECK(rep.status == SearchStatus::infinite);
    CHECK_FALSE(rep.kappa_prime.has_value());
    REQUIRE(rep.exhaustion);
    CHECK(rep.exhaustion->max_cut_size == static_cast<int>(binomial(n, 2)) - 4);
  }
  const auto j62 = super_cut_oracle(build_graph(johnson(6, 2)));
  CHECK(j62.kappa_prime == std::optional<std::size_t>(9));
  CHECK(j62.kappa == 8);
  const auto pet = super_cut_oracle(build_graph(kneser(5, 2)));
  CHECK(pet.kappa_prime == std::optional<std::size_t>(4));
  CHECK(pet.kappa == 3);

  OracleOptions small;
  small.max_vertices = 10;
  CHECK(kind_of([&] { super_cut_oracle(build_graph(johnson(6, 2)), small); }) ==
        ErrorKind::too_large);
}

TEST_CASE("oracle and flow search agree with enumeration") {
  for (const GraphParams& p : small_graphs()) {
    CAPTURE(p.n);
    CAPTURE(p.k);
    CAPTURE(p.t);
    const auto g = build_graph(p);
    if (g.order() < 2) continue;
    const auto oracle = super_cut_oracle(g);
    const auto ref = testing::brute_super_connectivity(brute_graph(p.n, p.k, p.t));
    CHECK(oracle.kappa_prime == (ref.size ? std::optional<std::size_t>(*ref.size)
                                          : std::nullopt));
    if (g.complete()) continue;
    const auto flow = super_connectivity_exact(g);
    CHECK(flow.kappa_prime == oracle.kappa_prime);
    if (oracle.status == SearchStatus::infinite) {
      CHECK(flow.status == SearchStatus::no_cut_found);
    }
  }
}

TEST_CASE("all minimum super cuts") {
  const auto j62 = build_graph(johnson(6, 2));
  const MinimumSuperCuts all = enumerate_minimum_super_cuts(j62);
  REQUIRE(all.size);
  CHECK(*all.size == 9);
  const auto ref = testing::brute_super_connectivity(brute_graph(6, 2, 1), true);
  CHECK(all.cuts.size() == ref.all.size());
  // The J(n,2) cut family: one cut per 3-subset of [6], counted once per
  // complementary pair.
  CHECK(all.cuts.size() == 10);
  for (std::size_t i = 1; i < all.cuts.size(); ++i) {
    CHECK(lex_less(all.cuts[i - 1], all.cuts[i]));
  }
  for (const VertexCut& c : all.cuts) {
    CHECK(testing::structural_properties(j62, c).all());
  }
  CHECK_FALSE(enumerate_minimum_super_cuts(build_graph(johnson(5, 2))).size);
}

TEST_CASE("minimum vertex cuts are neighbourhoods") {
  for (int n : {4, 5}) {
    const auto rep = min_cut_structure_check(build_graph(johnson(n, 2)));
    CHECK(rep.holds);
    CHECK(rep.kappa == static_cast<std::size_t>(2 * (n - 2)));
    // In the octahedron antipodal vertices share a neighbourhood.
    CHECK(rep.minimum_cuts == (n == 4 ? 3u : binomial(n, 2)));
    CHECK(rep.counterexamples.empty());
  }
  const auto kn = min_cut_structure_check(build_graph(johnson(5, 1)));
  CHECK(kn.holds);
  CHECK(kn.minimum_cuts == 0);
  // The Petersen graph has minimum cuts that are neighbourhoods only.
  CHECK(min_cut_structure_check(build_graph(kneser(5, 2))).holds);
}

}  // namespace
}  // namespace usg
