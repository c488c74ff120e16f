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
#include "usg/error.hpp"
#include "usg/subset_graph.hpp"

namespace usg {
namespace {

using testing::brute_graph;
using testing::pascal;

std::vector<Entry> entries_of(SubsetVertex v) { return v.entries(); }

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

TEST_CASE("binomial matches Pascal's triangle") {
  for (int n = 0; n <= 40; ++n) {
    for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == pascal(n, k));
  }
  CHECK(binomial(5, 7) == 0);
}

TEST_CASE("parameter validation") {
  CHECK(kind_of([] { GraphParams{3, 4, 0}.validate(); }) == ErrorKind::invalid_params);
  CHECK(kind_of([] { GraphParams{5, 2, 2}.validate(); }) == ErrorKind::invalid_params);
  CHECK(kind_of([] { GraphParams{5, 0, 0}.validate(); }) == ErrorKind::invalid_params);
  CHECK(kind_of([] { GraphParams{65, 2, 1}.validate(); }) == ErrorKind::capacity);
  CHECK(kind_of([] { build_graph(johnson(40, 20)); }) == ErrorKind::capacity);
  CHECK(johnson(6, 3).johnson());
  CHECK_FALSE(kneser(6, 3).johnson());
}

TEST_CASE("enumeration order and size") {
  const auto j32 = enumerate_vertices(johnson(3, 2));
  REQUIRE(j32.size() == 3);
  CHECK(entries_of(j32[0]) == std::vector<Entry>{1, 2});
  CHECK(entries_of(j32[1]) == std::vector<Entry>{1, 3});
  CHECK(entries_of(j32[2]) == std::vector<Entry>{2, 3});

  const auto one = enumerate_vertices(johnson(5, 5));
  REQUIRE(one.size() == 1);
  CHECK(entries_of(one[0]) == std::vector<Entry>{1, 2, 3, 4, 5});

  for (int n = 1; n <= 9; ++n) {
    for (int k = 1; k <= n; ++k) {
      const auto vs = enumerate_vertices(johnson(n, k));
      const auto ref = testing::combinations(n, k);
      REQUIRE(vs.size() == pascal(n, k));
      for (std::size_t i = 0; i < vs.size(); ++i) {
        CHECK(entries_of(vs[i]) == ref[i]);
        if (i > 0) CHECK(vs[i - 1] < vs[i]);
      }
    }
  }
  CHECK(enumerate_vertices(johnson(6, 3)).size() == 20);
}

TEST_CASE("adjacency, distance and swaps") {
  const GraphParams j = johnson(5, 3);
  CHECK(is_adjacent({1, 2, 3}, {1, 2, 4}, j));
  CHECK_FALSE(is_adjacent({1, 2, 3}, {1, 4, 5}, j));
  CHECK(is_adjacent({1, 2}, {3, 4}, kneser(5, 2)));
  CHECK(kind_of([&] { is_adjacent({1, 2}, {1, 2, 3}, j); }) == ErrorKind::invalid_vertex);

  CHECK(hamming_distance({1, 2, 3}, {1, 2, 3}) == 0);
  CHECK(hamming_distance({1, 2, 3}, {1, 2, 4}) == 1);
  CHECK(hamming_distance({1, 2, 3}, {1, 4, 5}) == 2);
  CHECK(kind_of([] { hamming_distance({1, 2}, {1, 2, 3}); }) == ErrorKind::invalid_vertex);

  CHECK(swap({1, 2, 3}, 3, 4) == SubsetVertex{1, 2, 4});
  CHECK(swap(ground_set(5), 5, 6) == SubsetVertex{1, 2, 3, 4, 6});
  CHECK(swap(swap({1, 2, 3}, 1, 4), 2, 5) == exchange({1, 2, 3}, {1, 2}, {4, 5}));
  CHECK(kind_of([] { swap({1, 2, 3}, 4, 5); }) == ErrorKind::invalid_swap);
  CHECK(kind_of([] { swap({1, 2, 3}, 1, 2); }) == ErrorKind::invalid_swap);

  // Removing and re-adding an entry cancels.
  CHECK(exchange({1, 2, 3, 4}, {1, 3}, {5, 3}) == SubsetVertex{2, 3, 4, 5});
  CHECK(kind_of([] { exchange({1, 2, 3}, {4}, {5}); }) == ErrorKind::invalid_swap);
  CHECK(kind_of([] { exchange({1, 2, 3}, {1}, {2}); }) == ErrorKind::invalid_swap);
}

TEST_CASE("hamming distance is a metric and matches Johnson adjacency") {
  for (int n = 2; n <= 7; ++n) {
    for (int k = 1; k < n; ++k) {
      const auto vs = enumerate_vertices(johnson(n, k));
      for (auto a : vs) {
        for (auto b : vs) {
          CHECK(hamming_distance(a, b) == hamming_distance(b, a));
          CHECK((hamming_distance(a, b) == 0) == (a == b));
          CHECK(is_adjacent(a, b, johnson(n, k)) == (hamming_distance(a, b) == 1));
          if (n <= 5) {
            for (auto c : vs) {
              CHECK(hamming_distance(a, c) <=
                    hamming_distance(a, b) + hamming_distance(b, c));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("graphs match a brute-force construction") {
  for (int n = 1; n <= 8; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (int t = 0; t < k; ++t) {
        const auto g = build_graph({n, k, t});
        const auto ref = brute_graph(n, k, t);
        REQUIRE(g.order() == static_cast<std::size_t>(ref.order()));
        CHECK(g.edge_count() == static_cast<std::size_t>(ref.edges()));
        for (Rank a = 0; a < g.order(); ++a) {
          std::vector<Rank> want;
          for (int b = 0; b < ref.order(); ++b) {
            if (ref.adj[a][b]) want.push_back(static_cast<Rank>(b));
          }
          const auto got = g.neighbors(a);
          CHECK(std::vector<Rank>(got.begin(), got.end()) == want);
          CHECK(g.rank(g.vertex(a)) == a);
        }
        if (t == k - 1 && n > k) {
          CHECK(g.min_degree() == static_cast<std::size_t>(k * (n - k)));
        }
      }
    }
  }
}

TEST_CASE("named graphs") {
  const auto j73 = build_graph(johnson(7, 3));
  CHECK(j73.order() == 35);
  for (Rank v = 0; v < j73.order(); ++v) CHECK(j73.degree(v) == 12);

  const auto j42 = build_graph(johnson(4, 2));
  CHECK(j42.order() == 6);
  CHECK(j42.edge_count() == 12);
  CHECK(j42.min_degree() == 4);

  const auto petersen = build_graph(kneser(5, 2));
  CHECK(petersen.order() == 10);
  CHECK(petersen.edge_count() == 15);
  for (Rank v = 0; v < 10; ++v) CHECK(petersen.degree(v) == 3);

  CHECK(build_graph(johnson(5, 1)).complete());
  CHECK_FALSE(j42.rank_of(SubsetVertex{1, 5}).has_value());
  CHECK(kind_of([&] { j42.rank(SubsetVertex{1, 2, 3}); }) == ErrorKind::invalid_vertex);
}

TEST_CASE("vertices containing an entry") {
  const auto g = build_graph(johnson(4, 2));
  const auto b1 = vertices_containing_entry(g, 1);
  REQUIRE(b1.size() == 3);
  CHECK(g.vertex(b1[0]) == SubsetVertex{1, 2});
  CHECK(g.vertex(b1[1]) == SubsetVertex{1, 3});
  CHECK(g.vertex(b1[2]) == SubsetVertex{1, 4});
  for (int n = 3; n <= 8; ++n) {
    for (int k = 1; k <= n; ++k) {
      const auto h = build_graph(johnson(n, k));
      for (Entry r = 1; r <= n; ++r) {
        CHECK(vertices_containing_entry(h, r).size() == pascal(n - 1, k - 1));
      }
    }
  }
  CHECK(vertices_containing_entry(build_graph(johnson(4, 4)), 2).size() == 1);
  CHECK(kind_of([&] { vertices_containing_entry(g, 5); }) == ErrorKind::invalid_entry);
  CHECK(kind_of([&] { vertices_containing_entry(g, 0); }) == ErrorKind::invalid_entry);
}

TEST_CASE("entry deletion gives J(n-1,k)") {
  for (int n = 3; n <= 8; ++n) {
    for (int k = 1; k < n; ++k) {
      const auto g = build_graph(johnson(n, k));
      const auto target = build_graph(johnson(n - 1, k));
      for (Entry r = 1; r <= n; ++r) {
        const EntryDeletion d = delete_entry_subgraph(g, r);
        CHECK(d.survivors.size() == pascal(n - 1, k));
        CHECK(d.graph.order() == target.order());
        CHECK(is_isomorphism(d.graph, target,
                             VertexMap{[&] {
                               std::vector<Rank> id(target.order());
                               for (Rank i = 0; i < id.size(); ++i) id[i] = i;
                               return id;
                             }()}));
        // The survivor map preserves adjacency from g.
        for (std::size_t i = 0; i < d.survivors.size(); ++i) {
          for (std::size_t j = 0; j < d.survivors.size(); ++j) {
            CHECK(g.adjacent(d.survivors[i], d.survivors[j]) ==
                  d.graph.adjacent(d.to_reduced.image[i], d.to_reduced.image[j]));
          }
        }
      }
    }
  }
  const auto d = delete_entry_subgraph(build_graph(johnson(5, 2)), 5);
  CHECK(d.graph.order() == 6);
  CHECK(kind_of([] { delete_entry_subgraph(build_graph(johnson(3, 3)), 1); }) ==
        ErrorKind::invalid_params);
}

TEST_CASE("complement isomorphism") {
  const auto j52 = build_graph(johnson(5, 2));
  const auto j53 = build_graph(johnson(5, 3));
  const VertexMap m = complement_isomorphism(j52, j53);
  CHECK(j53.vertex(m.image[j52.rank(SubsetVertex{1, 2})]) == SubsetVertex{3, 4, 5});
  CHECK(is_isomorphism(j52, j53, m));
  for (int n = 2; n <= 8; ++n) {
    for (int k = 1; k < n; ++k) {
      const auto a = build_graph(johnson(n, k));
      const auto b = build_graph(johnson(n, n - k));
      CHECK(is_isomorphism(a, b, complement_isomorphism(a, b)));
    }
  }
  const auto j42 = build_graph(johnson(4, 2));
  CHECK(is_isomorphism(j42, j42, complement_isomorphism(j42, j42)));

  // A non-bijection and a non-edge-preserving bijection are rejected.
  VertexMap bad = m;
  bad.image[0] = bad.image[1];
  CHECK_FALSE(is_isomorphism(j52, j53, bad));
  VertexMap id{std::vector<Rank>(10)};
  for (Rank i = 0; i < 10; ++i) id.image[i] = i;
  CHECK_FALSE(is_isomorphism(j52, build_graph(kneser(5, 2)), id));

  const auto kn = build_graph(kneser(6, 2));
  CHECK(kind_of([&] { complement_isomorphism(kn, build_graph(johnson(6, 4))); }) ==
        ErrorKind::unsupported);
}

}  // namespace
}  // namespace usg
