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


#include "usg/io.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

#include "usg/error.hpp"

namespace usg {

namespace {

using Pair = std::pair<Rank, Rank>;

[[noreturn]] void parse_error(const std::string& what) {
  throw Error(ErrorKind::parse, what);
}

std::vector<Pair> canonical_edges(const UniformSubsetGraph& g) {
  std::vector<Pair> out;
  out.reserve(g.edge_count());
  for (Rank u = 0; u < g.order(); ++u) {
    for (Rank v : g.neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

ojson cut_json(const UniformSubsetGraph& g, const VertexCut& cut) {
  ojson arr = ojson::array();
  for (Rank r : cut.removed) arr.push_back(subset_json(g.vertex(r)));
  return arr;
}

ojson components_json(const UniformSubsetGraph& g,
                      const std::vector<std::vector<Rank>>& comps) {
  ojson arr = ojson::array();
  for (const auto& comp : comps) {
    ojson c = ojson::array();
    for (Rank r : comp) c.push_back(subset_json(g.vertex(r)));
    arr.push_back(std::move(c));
  }
  return arr;
}

ojson subsets_json(const std::vector<SubsetVertex>& vs) {
  ojson arr = ojson::array();
  for (SubsetVertex v : vs) arr.push_back(subset_json(v));
  return arr;
}

ojson optional_entry(std::optional<Entry> e, int k) {
  if (!e) return nullptr;
  return symbolic_entry(*e, k);
}

// Rebuilds the graph from params and checks the stored description.
UniformSubsetGraph rebuild(const GraphParams& p, std::size_t order,
                           std::vector<Pair> edges,
                           const std::vector<SubsetVertex>& listed) {
  UniformSubsetGraph g = build_graph(p);
  if (order != g.order()) {
    parse_error("vertex count " + std::to_string(order) + " but G(" +
                std::to_string(p.n) + "," + std::to_string(p.k) + "," +
                std::to_string(p.t) + ") has " + std::to_string(g.order()));
  }
  if (!listed.empty()) {
    if (listed.size() != g.order()) parse_error("incomplete vertex list");
    for (Rank r = 0; r < g.order(); ++r) {
      if (listed[r] != g.vertex(r)) {
        parse_error("vertex " + std::to_string(r + 1) + " is not " +
                    g.vertex(r).to_string());
      }
    }
  }
  for (auto& [a, b] : edges) {
    if (a >= g.order() || b >= g.order()) parse_error("edge endpoint out of range");
    if (a == b) parse_error("self-loop");
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    parse_error("duplicate edge");
  }
  if (edges != canonical_edges(g)) {
    parse_error("edge set differs from the canonical G(n,k,t)");
  }
  return g;
}

Rank one_based(long long v) {
  if (v < 1) parse_error("vertex numbers are 1-based");
  return static_cast<Rank>(v - 1);
}

UniformSubsetGraph read_dimacs(std::istream& in) {
  std::optional<GraphParams> p;
  std::optional<std::size_t> order, size;
  std::vector<Pair> edges;
  std::vector<SubsetVertex> listed;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "c") {
      std::string key;
      if (!(ls >> key)) continue;
      if (key == "n") {
        GraphParams q;
        std::string kk, tt;
        if (!(ls >> q.n >> kk >> q.k >> tt >> q.t) || kk != "k" || tt != "t") {
          parse_error("bad parameter comment: " + line);
        }
        p = q;
      } else if (key == "v") {
        long long r = 0;
        if (!(ls >> r)) parse_error("bad vertex comment: " + line);
        std::vector<Entry> entries;
        Entry e = 0;
        while (ls >> e) entries.push_back(e);
        if (one_based(r) != listed.size()) parse_error("vertex comments out of order");
        listed.push_back(SubsetVertex::from_entries(entries));
      }
    } else if (tag == "p") {
      std::string kind;
      std::size_t nv = 0, ne = 0;
      if (!(ls >> kind >> nv >> ne) || kind != "edge") {
        parse_error("bad problem line: " + line);
      }
      order = nv;
      size = ne;
    } else if (tag == "e") {
      long long a = 0, b = 0;
      if (!(ls >> a >> b)) parse_error("bad edge line: " + line);
      edges.emplace_back(one_based(a), one_based(b));
    } else {
      parse_error("unknown DIMACS line: " + line);
    }
  }
  if (!p) parse_error("missing 'c n <n> k <k> t <t>' comment");
  if (!order) parse_error("missing problem line");
  if (edges.size() != *size) parse_error("edge count does not match problem line");
  return rebuild(*p, *order, std::move(edges), listed);
}

UniformSubsetGraph read_edge_list(std::istream& in) {
  std::optional<GraphParams> p;
  std::optional<std::size_t> order, size;
  std::vector<Pair> edges;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "#") {
      std::string key;
      if (!(ls >> key)) continue;
      if (key == "n") {
        GraphParams q;
        std::string kk, tt;
        if (!(ls >> q.n >> kk >> q.k >> tt >> q.t) || kk != "k" || tt != "t") {
          parse_error("bad parameter header: " + line);
        }
        p = q;
      } else if (key == "vertices") {
        std::string ek;
        std::size_t nv = 0, ne = 0;
        if (!(ls >> nv >> ek >> ne) || ek != "edges") {
          parse_error("bad count header: " + line);
        }
        order = nv;
        size = ne;
      }
      continue;
    }
    long long a = 0, b = 0;
    std::istringstream es(line);
    if (!(es >> a >> b)) parse_error("bad edge line: " + line);
    edges.emplace_back(one_based(a), one_based(b));
  }
  if (!p) parse_error("missing '# n <n> k <k> t <t>' header");
  if (!order) parse_error("missing '# vertices <N> edges <M>' header");
  if (edges.size() != *size) parse_error("edge count does not match header");
  return rebuild(*p, *order, std::move(edges), {});
}

UniformSubsetGraph read_json_graph(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    GraphParams p{j.at("n").get<int>(), j.at("k").get<int>(),
                  j.at("t").get<int>()};
    std::vector<SubsetVertex> listed;
    for (const auto& v : j.at("vertices")) {
      listed.push_back(SubsetVertex::from_entries(v.get<std::vector<Entry>>()));
    }
    std::vector<Pair> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) parse_error("edges are [u, v] pairs");
      edges.emplace_back(one_based(e[0].get<long long>()),
                         one_based(e[1].get<long long>()));
    }
    return rebuild(p, listed.size(), std::move(edges), listed);
  } catch (const nlohmann::json::exception& e) {
    parse_error(std::string("graph JSON: ") + e.what());
  }
}

std::vector<SubsetVertex> subsets_from(const nlohmann::json& arr,
                                       const UniformSubsetGraph& g) {
  std::vector<SubsetVertex> out;
  for (const auto& v : arr) out.push_back(subset_from_json(v, g));
  return out;
}

}  // namespace

std::string_view to_string(GraphFormat f) {
  switch (f) {
    case GraphFormat::dimacs: return "dimacs";
    case GraphFormat::json: return "json";
    case GraphFormat::edge_list: return "edge-list";
  }
  return "unknown";
}

std::optional<GraphFormat> parse_graph_format(std::string_view s) {
  for (GraphFormat f :
       {GraphFormat::dimacs, GraphFormat::json, GraphFormat::edge_list}) {
    if (s == to_string(f)) return f;
  }
  return std::nullopt;
}

void write_graph(std::ostream& out, const UniformSubsetGraph& g,
                 GraphFormat format) {
  const GraphParams& p = g.params();
  const auto edges = canonical_edges(g);
  switch (format) {
    case GraphFormat::dimacs:
      out << "c uniform subset graph G(n,k,t)\n";
      out << "c n " << p.n << " k " << p.k << " t " << p.t << "\n";
      for (Rank r = 0; r < g.order(); ++r) {
        out << "c v " << r + 1;
        for (Entry e : g.vertex(r).entries()) out << ' ' << e;
        out << "\n";
      }
      out << "p edge " << g.order() << ' ' << edges.size() << "\n";
      for (const auto& [a, b] : edges) out << "e " << a + 1 << ' ' << b + 1 << "\n";
      break;
    case GraphFormat::edge_list:
      out << "# n " << p.n << " k " << p.k << " t " << p.t << "\n";
      out << "# vertices " << g.order() << " edges " << edges.size() << "\n";
      for (const auto& [a, b] : edges) out << a + 1 << ' ' << b + 1 << "\n";
      break;
    case GraphFormat::json: {
      ojson j;
      j["n"] = p.n;
      j["k"] = p.k;
      j["t"] = p.t;
      j["vertices"] = ojson::array();
      for (SubsetVertex v : g.vertices()) j["vertices"].push_back(subset_json(v));
      j["edges"] = ojson::array();
      for (const auto& [a, b] : edges) j["edges"].push_back({a + 1, b + 1});
      out << j.dump() << "\n";
      break;
    }
  }
}

std::string graph_to_string(const UniformSubsetGraph& g, GraphFormat format) {
  std::ostringstream out;
  write_graph(out, g, format);
  return out.str();
}

UniformSubsetGraph read_graph(std::string_view text) {
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start == std::string_view::npos) parse_error("empty graph file");
  if (text[start] == '{') return read_json_graph(text);
  std::istringstream in{std::string(text)};
  if (text[start] == '#') return read_edge_list(in);
  if (text[start] == 'c' || text[start] == 'p') return read_dimacs(in);
  parse_error("unrecognized graph format");
}

ojson subset_json(SubsetVertex v) {
  ojson arr = ojson::array();
  for (Entry e : v.entries()) arr.push_back(e);
  return arr;
}

SubsetVertex subset_from_json(const nlohmann::json& j,
                              const UniformSubsetGraph& g) {
  if (!j.is_array()) parse_error("subsets are integer arrays");
  std::vector<Entry> entries;
  for (const auto& e : j) {
    if (!e.is_number_integer()) parse_error("subsets are integer arrays");
    const Entry v = e.get<Entry>();
    if (v < 1 || v > g.params().n) {
      throw Error(ErrorKind::rank_range,
                  "entry " + std::to_string(v) + " outside [" +
                      std::to_string(g.params().n) + "]");
    }
    entries.push_back(v);
  }
  SubsetVertex v;
  try {
    v = SubsetVertex::from_entries(entries);
  } catch (const Error& e) {
    throw Error(ErrorKind::rank_range, e.what());
  }
  if (!g.rank_of(v)) {
    throw Error(ErrorKind::rank_range, v.to_string() + " is not a vertex");
  }
  return v;
}

ojson graph_params_json(const GraphParams& p) {
  ojson j;
  j["n"] = p.n;
  j["k"] = p.k;
  j["t"] = p.t;
  return j;
}

ojson connectivity_report_json(const UniformSubsetGraph& g,
                               const ConnectivityReport& rep,
                               const ReportExtras& extras) {
  ojson j;
  j["graph"] = graph_params_json(g.params());
  j["kappa"] = rep.kappa;
  if (rep.kappa_prime) {
    j["kappa_prime"] = *rep.kappa_prime;
  } else if (rep.status == SearchStatus::infinite) {
    j["kappa_prime"] = "infinity";
  } else {
    j["kappa_prime"] = nullptr;
  }
  if (rep.kappa_prime_witness) {
    ojson w;
    w["cut"] = cut_json(g, rep.kappa_prime_witness->cut);
    w["components"] = components_json(g, rep.kappa_prime_witness->components);
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  j["method"] = to_string(rep.method);
  j["agreement"] = extras.agreement ? ojson(*extras.agreement) : ojson(nullptr);
  j["notes"] = extras.notes;
  j["status"] = to_string(rep.status);
  if (rep.exhaustion) {
    j["exhaustion"] = {{"max_cut_size", rep.exhaustion->max_cut_size},
                       {"subsets_examined", rep.exhaustion->subsets_examined}};
  } else {
    j["exhaustion"] = nullptr;
  }
  j["bounds"] = {{"lower", rep.lower_bound},
                 {"upper", rep.upper_bound ? ojson(*rep.upper_bound)
                                           : ojson(nullptr)}};
  if (extras.timing) {
    j["nodes"] = rep.nodes;
    j["elapsed_ms"] =
        std::chrono::duration<double, std::milli>(rep.elapsed).count();
  }
  return j;
}

ojson kappa_report_json(const UniformSubsetGraph& g,
                        const GlobalConnectivity& rep,
                        const ReportExtras& extras) {
  ojson j;
  j["graph"] = graph_params_json(g.params());
  j["kappa"] = rep.kappa;
  if (rep.witness) {
    const CutCertificate cert = is_super_vertex_cut(g, *rep.witness);
    ojson w;
    w["cut"] = cut_json(g, cert.cut);
    w["components"] = components_json(g, cert.components);
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  j["method"] = to_string(Method::flow_search);
  j["agreement"] = extras.agreement ? ojson(*extras.agreement) : ojson(nullptr);
  j["notes"] = extras.notes;
  return j;
}

ojson cut_certificate_json(const UniformSubsetGraph& g,
                           const CutCertificate& cert, std::string_view label) {
  ojson j;
  j["kind"] = "cut";
  j["label"] = label;
  j["graph"] = graph_params_json(g.params());
  j["size"] = cert.cut.size();
  j["cut"] = cut_json(g, cert.cut);
  j["components"] = components_json(g, cert.components);
  j["min_component_order"] = cert.min_component_order;
  j["is_disconnecting"] = cert.is_disconnecting;
  j["is_super"] = cert.is_super;
  return j;
}

ojson path_certificate_json(const PathFamily& fam,
                            const PathVerification& verification,
                            const PathCertificateMeta& meta,
                            const GraphParams& params) {
  ojson j;
  j["kind"] = "paths";
  j["graph"] = graph_params_json(params);
  j["lemma"] = meta.lemma;
  j["case"] = meta.case_id ? ojson(std::string(to_string(*meta.case_id)))
                           : ojson(nullptr);
  j["alpha"] = optional_entry(meta.alpha, meta.k);
  j["beta"] = optional_entry(meta.beta, meta.k);
  j["gamma"] = optional_entry(meta.gamma, meta.k);
  j["expected_paths"] = meta.expected_paths;
  j["exact_count"] = meta.exact_count;
  j["required_entry"] =
      fam.required_entry ? ojson(*fam.required_entry) : ojson(nullptr);
  j["sources"] = subsets_json(fam.sources);
  j["targets"] = subsets_json(fam.targets);
  j["forbidden"] = subsets_json(fam.forbidden);
  j["groups"] = ojson::array();
  for (const PathGroup& grp : fam.groups) {
    j["groups"].push_back({{"name", grp.name}, {"count", grp.count}});
  }
  j["paths"] = ojson::array();
  for (const LabeledPath& p : fam.paths) {
    j["paths"].push_back({{"label", p.label}, {"vertices", subsets_json(p.vertices)}});
  }
  const bool count_ok = meta.exact_count
                            ? fam.paths.size() == meta.expected_paths
                            : fam.paths.size() >= meta.expected_paths;
  ojson v;
  v["pass"] = verification.pass() && count_ok;
  v["count"] = fam.paths.size();
  v["count_ok"] = count_ok;
  v["vertices_valid"] = verification.vertices_valid;
  v["adjacency"] = verification.adjacency;
  v["disjoint"] = verification.disjoint;
  v["required_entry"] = verification.required_entry;
  v["forbidden_avoided"] = verification.forbidden_avoided;
  v["endpoints"] = verification.endpoints;
  v["failures"] = verification.failures;
  j["verification"] = std::move(v);
  return j;
}

CertificateCheck verify_certificate(const UniformSubsetGraph& g,
                                    const nlohmann::json& cert) {
  CertificateCheck out;
  try {
    out.kind = cert.at("kind").get<std::string>();
    const auto& gp = cert.at("graph");
    const GraphParams p{gp.at("n").get<int>(), gp.at("k").get<int>(),
                        gp.at("t").get<int>()};
    if (!(p == g.params())) {
      throw Error(ErrorKind::rank_range,
                  "certificate is for G(" + std::to_string(p.n) + "," +
                      std::to_string(p.k) + "," + std::to_string(p.t) +
                      "), graph is G(" + std::to_string(g.params().n) + "," +
                      std::to_string(g.params().k) + "," +
                      std::to_string(g.params().t) + ")");
    }
    if (out.kind == "cut") {
      std::vector<Rank> ranks;
      for (SubsetVertex v : subsets_from(cert.at("cut"), g)) {
        ranks.push_back(g.rank(v));
      }
      const VertexCut cut = VertexCut::from_ranks(ranks);
      if (cut.size() != ranks.size()) {
        out.violations.push_back("duplicate-vertex: the cut lists a vertex twice");
      }
      if (cert.contains("size") && cert.at("size").get<std::size_t>() != ranks.size()) {
        out.violations.push_back("size-mismatch: stated size " +
                                 cert.at("size").dump() + ", listed " +
                                 std::to_string(ranks.size()));
      }
      if (cut.size() >= g.order()) {
        out.violations.push_back("empty-remainder: the cut removes every vertex");
      } else {
        const CutCertificate c = is_super_vertex_cut(g, cut);
        if (!c.is_disconnecting) {
          out.violations.push_back("not-disconnecting: G - S is connected");
        } else if (!c.is_super) {
          out.violations.push_back(
              "isolated-vertex: G - S has a component of order " +
              std::to_string(c.min_component_order));
        }
      }
    } else if (out.kind == "paths") {
      PathFamily fam;
      if (!cert.at("required_entry").is_null()) {
        fam.required_entry = cert.at("required_entry").get<Entry>();
      }
      fam.sources = subsets_from(cert.at("sources"), g);
      fam.targets = subsets_from(cert.at("targets"), g);
      fam.forbidden = subsets_from(cert.at("forbidden"), g);
      for (const auto& p : cert.at("paths")) {
        LabeledPath lp;
        lp.label = p.at("label").get<std::string>();
        lp.vertices = subsets_from(p.at("vertices"), g);
        fam.paths.push_back(std::move(lp));
      }
      const PathVerification v = verify_path_family(g, fam);
      out.violations = v.failures;
      const auto need = cert.at("expected_paths").get<std::size_t>();
      const bool exact = cert.value("exact_count", false);
      if (exact ? fam.paths.size() != need : fam.paths.size() < need) {
        out.violations.push_back("path-count: " +
                                 std::to_string(fam.paths.size()) +
                                 " paths, need " + (exact ? "" : "at least ") +
                                 std::to_string(need));
      }
    } else {
      parse_error("unknown certificate kind '" + out.kind + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    parse_error(std::string("certificate: ") + e.what());
  }
  out.valid = out.violations.empty();
  return out;
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

}  // namespace usg
