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

#include <sstream>

#include "oracles.hpp"
#include "usg/error.hpp"
#include "usg/io.hpp"

namespace usg {
namespace {

using nlohmann::json;

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::parse;
}

std::vector<std::string> keys(const ojson& j) {
  std::vector<std::string> out;
  for (const auto& [k, v] : j.items()) out.push_back(k);
  return out;
}

TEST_CASE("graph round trips are byte-identical") {
  const std::vector<GraphParams> params = {
      {4, 2, 1}, {5, 2, 0}, {6, 3, 2}, {6, 3, 1}, {3, 1, 0}, {7, 3, 0}};
  for (const GraphParams& p : params) {
    const auto g = build_graph(p);
    for (GraphFormat f :
         {GraphFormat::dimacs, GraphFormat::json, GraphFormat::edge_list}) {
      CAPTURE(to_string(f));
      const std::string text = graph_to_string(g, f);
      const auto back = read_graph(text);
      CHECK(back.params() == p);
      CHECK(graph_to_string(back, f) == text);
    }
  }
}

TEST_CASE("written edges match the brute-force graph") {
  const auto g = build_graph({6, 3, 1});
  const auto bg = testing::brute_graph(6, 3, 1);
  const json j = json::parse(graph_to_string(g, GraphFormat::json));
  CHECK(j.at("edges").size() == bg.edges());
  for (const auto& e : j.at("edges")) {
    const auto a = e[0].get<std::size_t>() - 1, b = e[1].get<std::size_t>() - 1;
    CHECK(bg.adj[a][b]);
  }
  std::istringstream in(graph_to_string(g, GraphFormat::dimacs));
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.rfind("p edge", 0) == 0) {
      CHECK(line == "p edge 20 90");
      header = true;
    }
  }
  CHECK(header);
}

TEST_CASE("tampered graphs are rejected") {
  const auto g = build_graph({5, 2, 1});
  std::string el = graph_to_string(g, GraphFormat::edge_list);
  const auto pos = el.find("\n1 2\n");
  REQUIRE(pos != std::string::npos);
  el.replace(pos, 5, "\n1 10\n");
  CHECK(kind_of([&] { read_graph(el); }) == ErrorKind::parse);

  std::string js = graph_to_string(g, GraphFormat::json);
  js.replace(js.find("\"t\":1"), 5, "\"t\":0");
  CHECK(kind_of([&] { read_graph(js); }) == ErrorKind::parse);

  CHECK(kind_of([] { read_graph("hello"); }) == ErrorKind::parse);
  CHECK(kind_of([] { read_graph("{\"n\":4"); }) == ErrorKind::parse);
}

TEST_CASE("format names") {
  CHECK(parse_graph_format("dimacs") == std::optional(GraphFormat::dimacs));
  CHECK(parse_graph_format("edge-list") == std::optional(GraphFormat::edge_list));
  CHECK(parse_graph_format("json") == std::optional(GraphFormat::json));
  CHECK_FALSE(parse_graph_format("gml"));
}

TEST_CASE("subset json") {
  const auto g = build_graph({6, 3, 2});
  CHECK(subset_json(SubsetVertex{2, 4, 6}).dump() == "[2,4,6]");
  CHECK(subset_from_json(json::parse("[6,2,4]"), g) == SubsetVertex{2, 4, 6});
  CHECK(kind_of([&] { subset_from_json(json::parse("[1,2,7]"), g); }) ==
        ErrorKind::rank_range);
  CHECK(kind_of([&] { subset_from_json(json::parse("[1,2]"), g); }) ==
        ErrorKind::rank_range);
}

TEST_CASE("report key order") {
  const auto g = build_graph(johnson(6, 2));
  const ConnectivityReport rep = super_cut_oracle(g);
  const ojson j = connectivity_report_json(g, rep, {true, {}, false});
  CHECK(keys(j) == std::vector<std::string>{
                       "graph", "kappa", "kappa_prime", "witness", "method",
                       "agreement", "notes", "status", "exhaustion", "bounds"});
  CHECK(j["kappa"] == 8);
  CHECK(j["kappa_prime"] == 9);
  const ojson timed = connectivity_report_json(g, rep, {std::nullopt, {}, true});
  CHECK(timed.contains("elapsed_ms"));
  CHECK(timed.contains("nodes"));
  CHECK(timed["agreement"].is_null());

  const ConnectivityReport none = super_cut_oracle(build_graph(johnson(5, 2)));
  CHECK(connectivity_report_json(build_graph(johnson(5, 2)), none, {})
            ["kappa_prime"] == "infinity");
}

TEST_CASE("cut certificate verification") {
  const auto g = build_graph(johnson(6, 2));
  const CutCertificate c = is_super_vertex_cut(g, cut_jn2(g, {1, 2, 3}));
  const ojson cert = cut_certificate_json(g, c, "jn2");
  const json plain = json::parse(cert.dump());
  CHECK(verify_certificate(g, plain).valid);

  json dup = plain;
  dup["cut"].push_back(dup["cut"][0]);
  CHECK_FALSE(verify_certificate(g, dup).valid);

  json small = plain;
  small["cut"].erase(small["cut"].begin());
  small["size"] = small["cut"].size();
  const CertificateCheck s = verify_certificate(g, small);
  CHECK_FALSE(s.valid);
  REQUIRE_FALSE(s.violations.empty());

  // N(v) is a cut but leaves v isolated.
  std::vector<Rank> nb;
  for (Rank r = 0; r < g.order(); ++r) {
    if (g.adjacent(0, r)) nb.push_back(r);
  }
  const ojson iso = cut_certificate_json(
      g, is_super_vertex_cut(g, VertexCut::from_ranks(nb)), "neighbourhood");
  const CertificateCheck ic = verify_certificate(g, json::parse(iso.dump()));
  CHECK_FALSE(ic.valid);
  CHECK(ic.violations.at(0).rfind("isolated-vertex", 0) == 0);

  CHECK(kind_of([&] { verify_certificate(build_graph(johnson(7, 2)), plain); }) ==
        ErrorKind::rank_range);
  CHECK(kind_of([&] { verify_certificate(g, json{{"kind", "cut"}}); }) ==
        ErrorKind::parse);
}

TEST_CASE("path certificate verification") {
  const auto g = build_graph(johnson(8, 3));
  const PathFamily fam = lemma7_paths(lemma7_config(8, 3));
  const PathVerification v = verify_path_family(g, fam);
  PathCertificateMeta meta;
  meta.lemma = 7;
  meta.k = 3;
  meta.expected_paths = 10;
  meta.exact_count = true;
  const json cert = json::parse(
      path_certificate_json(fam, v, meta, g.params()).dump());
  CHECK(cert["verification"]["pass"] == true);
  CHECK(verify_certificate(g, cert).valid);

  json fewer = cert;
  fewer["paths"].erase(fewer["paths"].begin());
  const CertificateCheck fc = verify_certificate(g, fewer);
  CHECK_FALSE(fc.valid);
  CHECK(fc.violations.back().rfind("path-count", 0) == 0);
}

}  // namespace
}  // namespace usg
