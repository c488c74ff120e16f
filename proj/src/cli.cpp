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


#include "usg/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "usg/connectivity.hpp"
#include "usg/error.hpp"
#include "usg/formula.hpp"
#include "usg/io.hpp"
#include "usg/subset_graph.hpp"
#include "usg/witness.hpp"

namespace usg {

namespace {

using Clock = std::chrono::steady_clock;

int exit_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::capacity:
    case ErrorKind::too_large: return kExitCapacity;
    case ErrorKind::parse:
    case ErrorKind::rank_range: return kExitInvalid;
    default: return kExitUsage;
  }
}

std::string value_text(const std::optional<std::size_t>& v) {
  return v ? std::to_string(*v) : "infinity";
}

// ---------------------------------------------------------------------------
// Shared graph and engine options

struct GraphArgs {
  int n = 0;
  int k = 0;
  int t = 0;
  CLI::Option* t_opt = nullptr;

  void add(CLI::App* app, bool k_required = true) {
    app->add_option("--n", n, "ground set size")->required();
    auto* ko = app->add_option("--k", k, "subset size");
    if (k_required) ko->required();
    t_opt = app->add_option("--t", t, "intersection size (default k-1)");
  }
  GraphParams params() const {
    GraphParams p{n, k, t_opt && t_opt->count() ? t : k - 1};
    p.validate();
    return p;
  }
};

struct EngineArgs {
  std::string method = "auto";
  std::uint64_t budget = SearchOptions{}.node_budget;
  std::size_t max_oracle = OracleOptions{}.max_vertices;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  bool timing = false;

  void add(CLI::App* app) {
    app->add_option("--method", method, "auto | formula | flow | oracle")
        ->check(CLI::IsMember({"auto", "formula", "flow", "oracle"}))
        ->envname("USG_METHOD");
    app->add_option("--budget", budget, "flow-search node budget")
        ->envname("USG_BUDGET");
    app->add_option("--max-oracle-vertices", max_oracle,
                    "largest graph handed to the oracle")
        ->envname("USG_MAX_ORACLE_VERTICES");
    app->add_option("--workers", workers, "flow-search threads")
        ->check(CLI::PositiveNumber)
        ->envname("USG_WORKERS");
    app->add_flag("--timing", timing, "add node counts and elapsed times")
        ->envname("USG_TIMING");
  }
};

// Reference value of κ′ for g when one is known.
struct Expected {
  std::optional<std::size_t> value;  // empty means +∞
  bool ambiguous = false;
  std::string note;
};

std::optional<Expected> expected_kappa_prime(const GraphParams& p) {
  if (p.johnson() && p.n >= p.k) {
    const KappaPrimeFormula f = kappa_prime_formula(p.n, p.k);
    return Expected{f.value, f.ambiguous, f.note};
  }
  if (auto ref = kneser_kappa_prime_reference(p)) {
    return Expected{ref, false, ""};
  }
  return std::nullopt;
}

struct Evaluation {
  ConnectivityReport rep;
  std::optional<Expected> expected;
  std::optional<bool> agreement;
  std::vector<std::string> notes;
  int exit = kExitOk;
};

// κ and κ′ by the requested method, cross-checked against the formula.
Evaluation evaluate(const UniformSubsetGraph& g, const EngineArgs& args) {
  Evaluation ev;
  const GraphParams& p = g.params();
  ev.expected = expected_kappa_prime(p);
  const bool auto_mode = args.method == "auto";

  if (args.method == "formula") {
    if (!p.johnson()) {
      throw Error(ErrorKind::unsupported,
                  "the formula method needs a Johnson graph (t = k-1)");
    }
    if (p.n == p.k) {
      throw Error(ErrorKind::degenerate_graph, "J(k,k) is a single vertex");
    }
    ev.rep.method = Method::formula;
    ev.rep.kappa = kappa_formula(p.n, p.k);
    ev.rep.kappa_prime = ev.expected->value;
    ev.rep.status = ev.expected->value ? SearchStatus::exact
                                       : SearchStatus::infinite;
    ev.rep.lower_bound = ev.expected->value.value_or(0);
    ev.rep.upper_bound = ev.expected->value;
    if (ev.expected->ambiguous) ev.notes.push_back(ev.expected->note);
    return ev;
  }

  const bool use_oracle =
      args.method == "oracle" ||
      (auto_mode && g.order() <= std::min<std::size_t>(args.max_oracle, 63));
  if (use_oracle) {
    ev.rep = super_cut_oracle(g, OracleOptions{args.max_oracle});
  } else {
    ev.rep = super_connectivity_exact(g, SearchOptions{args.budget, args.workers});
  }

  std::optional<bool> kappa_ok;
  if (p.johnson()) kappa_ok = ev.rep.kappa == kappa_formula(p.n, p.k);

  std::optional<bool> prime_ok;
  if (ev.expected) {
    const Expected& ex = *ev.expected;
    switch (ev.rep.status) {
      case SearchStatus::exact:
      case SearchStatus::infinite:
        prime_ok = ev.rep.kappa_prime == ex.value;
        break;
      case SearchStatus::no_cut_found:
        prime_ok = !ex.value.has_value();
        break;
      case SearchStatus::budget_exceeded:
        break;
    }
    if (ex.ambiguous) {
      ev.notes.push_back(ex.note);
      if (prime_ok == false) {
        ev.notes.push_back("discrepancy: formula gives " + value_text(ex.value) +
                           ", computed " + value_text(ev.rep.kappa_prime));
      }
    }
  }
  if (kappa_ok || prime_ok) {
    ev.agreement = kappa_ok.value_or(true) && prime_ok.value_or(true);
  }
  const bool ambiguous = ev.expected && ev.expected->ambiguous;
  if (ev.agreement == false && !(ambiguous && kappa_ok.value_or(true))) {
    ev.notes.push_back("disagreement with the closed form");
    ev.exit = kExitInvalid;
  }

  if (ev.rep.status == SearchStatus::no_cut_found) {
    ev.notes.push_back("flow search found no super vertex-cut");
    if (auto_mode && ev.expected && !ev.expected->value && !ambiguous) {
      ev.rep.method = Method::formula;
      ev.rep.status = SearchStatus::infinite;
      ev.notes.push_back("infinity taken from the closed form");
    }
  }
  if (ev.rep.status == SearchStatus::budget_exceeded) {
    ev.notes.push_back("node budget exhausted; bounds only");
    const bool fallback =
        auto_mode && ev.expected && ev.expected->value && !ambiguous &&
        *ev.expected->value >= ev.rep.lower_bound &&
        (!ev.rep.upper_bound || *ev.expected->value <= *ev.rep.upper_bound);
    if (fallback) {
      ev.rep.method = Method::formula;
      ev.rep.kappa_prime = ev.expected->value;
      ev.notes.push_back("value taken from the closed form");
    } else {
      ev.exit = std::max(ev.exit, static_cast<int>(kExitCapacity));
    }
  }
  return ev;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::parse, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Entry> parse_list(const std::string& s) {
  std::vector<Entry> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::invalid_params, "bad list item '" + item + "'");
    }
  }
  return out;
}

Relabeling parse_relabel(const std::string& s) {
  if (s.empty()) return {};
  return Relabeling{parse_list(s)};
}

// ---------------------------------------------------------------------------
// Commands

int cmd_gen(const GraphArgs& ga, const std::string& format, std::ostream& out) {
  const auto fmt = parse_graph_format(format);
  if (!fmt) throw Error(ErrorKind::invalid_params, "unknown format " + format);
  write_graph(out, build_graph(ga.params()), *fmt);
  return kExitOk;
}

int cmd_kappa(const GraphArgs& ga, bool timing, std::ostream& out) {
  const auto start = Clock::now();
  const UniformSubsetGraph g = build_graph(ga.params());
  if (g.params().n == g.params().k) {
    throw Error(ErrorKind::degenerate_graph, "J(k,k) is a single vertex");
  }
  if (!is_connected(g)) {
    throw Error(ErrorKind::not_connected, "graph is not connected");
  }
  const GlobalConnectivity rep = global_vertex_connectivity(g);
  ReportExtras extras;
  extras.timing = timing;
  const GraphParams& p = g.params();
  if (p.johnson()) extras.agreement = rep.kappa == kappa_formula(p.n, p.k);
  if (!rep.witness) extras.notes.push_back("complete graph: kappa = |V| - 1");
  ojson j = kappa_report_json(g, rep, extras);
  if (timing) {
    j["elapsed_ms"] =
        std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  }
  out << dump(j);
  return extras.agreement == false ? kExitInvalid : kExitOk;
}

int cmd_superkappa(const GraphArgs& ga, const EngineArgs& ea, std::ostream& out) {
  const UniformSubsetGraph g = build_graph(ga.params());
  const Evaluation ev = evaluate(g, ea);
  ReportExtras extras{ev.agreement, ev.notes, ea.timing};
  out << dump(connectivity_report_json(g, ev.rep, extras));
  return ev.exit;
}

int cmd_witness(const std::string& kind, const GraphArgs& ga,
                const std::string& triple, const std::string& relabel,
                std::ostream& out) {
  if (kind == "jn2") {
    if (ga.k != 0 && ga.k != 2) {
      throw Error(ErrorKind::invalid_params, "jn2 needs k = 2");
    }
    const auto t = parse_list(triple);
    if (t.size() != 3) throw Error(ErrorKind::invalid_params, "--triple takes a,b,c");
    const UniformSubsetGraph g = build_graph(johnson(ga.n, 2));
    const CutCertificate cert =
        is_super_vertex_cut(g, cut_jn2(g, {t[0], t[1], t[2]}));
    out << dump(cut_certificate_json(g, cert, "jn2"));
    return cert.is_super ? kExitOk : kExitInvalid;
  }
  const EdgeNeighborhoodCut cut =
      cut_edge_neighborhood(ga.n, ga.k, parse_relabel(relabel));
  const UniformSubsetGraph g = build_graph(johnson(ga.n, ga.k));
  const CutCertificate cert = is_super_vertex_cut(g, cut.to_cut(g));
  ojson j = cut_certificate_json(g, cert, "edge-neighborhood");
  j["parts"] = {{"s1", cut.s1.size()}, {"s2", cut.s2.size()}, {"s3", cut.s3.size()}};
  out << dump(j);
  return cert.is_super ? kExitOk : kExitInvalid;
}

struct PathArgs {
  int lemma = 7;
  std::string case_id;
  std::string alpha, beta, gamma;
  std::string t20 = "by-beta";
  std::string relabel;
};

int cmd_paths(const GraphArgs& ga, const PathArgs& pa, std::ostream& out) {
  const int n = ga.n;
  const int k = ga.k;
  if (k < 3 || n < k + 3) {
    throw Error(ErrorKind::unsupported, "path families need k >= 3 and n >= k+3");
  }
  const UniformSubsetGraph g = build_graph(johnson(n, k));
  const Relabeling relabel = parse_relabel(pa.relabel);
  PathCertificateMeta meta;
  meta.lemma = pa.lemma;
  meta.k = k;
  ojson j;
  if (pa.lemma == 7) {
    const Lemma7Config cfg = lemma7_config(n, k, relabel);
    const PathFamily fam = lemma7_paths(cfg);
    meta.expected_paths = static_cast<std::size_t>((k - 1) * (n - k));
    meta.exact_count = true;
    j = path_certificate_json(fam, verify_path_family(g, fam), meta, g.params());
    j["classes"] = {{"a1", cfg.a1.size()}, {"a2", cfg.a2.size()},
                    {"a3", cfg.a3.size()}, {"a4", cfg.a4.size()}};
  } else if (pa.lemma == 8) {
    const auto c = parse_lemma8_case(pa.case_id);
    if (!c) throw Error(ErrorKind::invalid_params, "unknown case '" + pa.case_id + "'");
    auto entry = [&](const std::string& s, const char* name) -> std::optional<Entry> {
      if (s.empty()) return std::nullopt;
      const auto e = parse_symbolic_entry(s, k);
      if (!e) throw Error(ErrorKind::invalid_params, std::string("bad ") + name);
      return e;
    };
    meta.case_id = c;
    Lemma8Config cfg;
    try {
      cfg = lemma8_config(n, k, *c, entry(pa.alpha, "alpha"),
                          entry(pa.beta, "beta"), entry(pa.gamma, "gamma"),
                          relabel);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::unsupported) throw;
      ojson o;
      o["kind"] = "paths";
      o["graph"] = graph_params_json(g.params());
      o["lemma"] = 8;
      o["case"] = pa.case_id;
      o["status"] = "flagged-omitted";
      o["reason"] = e.what();
      out << dump(o);
      return kExitOmitted;
    }
    if (pa.t20 == "x13") cfg.t20 = T20Vertex::x13_k2n;
    if (pa.t20 == "x23") cfg.t20 = T20Vertex::x23_k1n;
    meta.alpha = cfg.alpha;
    meta.beta = cfg.beta;
    meta.gamma = cfg.gamma;
    meta.expected_paths = static_cast<std::size_t>(2 * k - 1);
    const PathFamily fam = lemma8_paths(cfg);
    j = path_certificate_json(fam, verify_path_family(g, fam), meta, g.params());
  } else {
    throw Error(ErrorKind::invalid_params, "--lemma is 7 or 8");
  }
  out << dump(j);
  return j["verification"]["pass"].get<bool>() ? kExitOk : kExitInvalid;
}

int cmd_verify(const std::string& graph_path, const std::string& cert_path,
               std::ostream& out) {
  const UniformSubsetGraph g = read_graph(read_file(graph_path));
  nlohmann::json cert;
  try {
    cert = nlohmann::json::parse(read_file(cert_path));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse, std::string("certificate: ") + e.what());
  }
  const CertificateCheck check = verify_certificate(g, cert);
  ojson j;
  j["kind"] = check.kind;
  j["valid"] = check.valid;
  j["violations"] = check.violations;
  out << dump(j);
  return check.valid ? kExitOk : kExitInvalid;
}

struct TableArgs {
  int k_min = 1, k_max = 4, n_min = 1, n_max = 9;
  std::string format = "csv";
};

struct TableRow {
  int n = 0, k = 0;
  std::size_t kappa_formula = 0;
  std::optional<std::size_t> kappa_computed;
  KappaPrimeFormula kappa_prime_formula;
  bool prime_computed = false;
  std::optional<std::size_t> kappa_prime_computed;  // empty means +∞
  std::string method;
  std::optional<bool> agreement;
  std::string note;
  double elapsed_ms = 0;
};

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

int cmd_table(const TableArgs& ta, const EngineArgs& ea, std::ostream& out,
              std::ostream& err) {
  if (ta.k_min < 1 || ta.k_max < ta.k_min || ta.n_max < ta.n_min) {
    throw Error(ErrorKind::invalid_params, "empty or invalid table range");
  }
  std::vector<TableRow> rows;
  std::size_t agree = 0, disagree = 0, ambiguous = 0, skipped = 0;
  for (int k = ta.k_min; k <= ta.k_max; ++k) {
    for (int n = std::max(ta.n_min, k); n <= ta.n_max; ++n) {
      const auto start = Clock::now();
      TableRow row;
      row.n = n;
      row.k = k;
      row.kappa_formula = kappa_formula(n, k);
      row.kappa_prime_formula = kappa_prime_formula(n, k);
      std::vector<std::string> notes;
      try {
        const UniformSubsetGraph g = build_graph(johnson(n, k));
        if (n == k) {
          throw Error(ErrorKind::degenerate_graph, "J(k,k) is a single vertex");
        }
        row.kappa_computed = global_vertex_connectivity(g).kappa;
        const bool skip_oracle =
            ea.method == "oracle" && g.order() > ea.max_oracle;
        if (skip_oracle) {
          notes.push_back("over the oracle cap");
        } else {
          const Evaluation ev = evaluate(g, ea);
          row.method = to_string(ev.rep.method);
          if (ev.rep.status == SearchStatus::exact ||
              ev.rep.status == SearchStatus::infinite ||
              ev.rep.method == Method::formula) {
            row.prime_computed = ev.rep.method != Method::formula || ea.method == "formula";
            row.kappa_prime_computed = ev.rep.kappa_prime;
          }
          row.agreement = ev.agreement;
          notes.insert(notes.end(), ev.notes.begin(), ev.notes.end());
        }
      } catch (const Error& e) {
        notes.push_back(e.what());
      }
      for (const auto& s : notes) {
        row.note += (row.note.empty() ? "" : "; ") + s;
      }
      row.elapsed_ms =
          std::chrono::duration<double, std::milli>(Clock::now() - start).count();
      if (!row.agreement) {
        ++skipped;
      } else if (row.kappa_prime_formula.ambiguous) {
        ++ambiguous;
      } else if (*row.agreement) {
        ++agree;
      } else {
        ++disagree;
      }
      err << "J(" << n << "," << k << ") done\n";
      rows.push_back(std::move(row));
    }
  }

  auto formula_text = [](const TableRow& r, const char* inf) {
    return r.kappa_prime_formula.value
               ? std::to_string(*r.kappa_prime_formula.value)
               : std::string(inf);
  };
  if (ta.format == "json") {
    ojson j;
    j["rows"] = ojson::array();
    for (const TableRow& r : rows) {
      ojson o;
      o["n"] = r.n;
      o["k"] = r.k;
      o["kappa_formula"] = r.kappa_formula;
      o["kappa_computed"] =
          r.kappa_computed ? ojson(*r.kappa_computed) : ojson(nullptr);
      o["kappa_prime_formula"] =
          r.kappa_prime_formula.value ? ojson(*r.kappa_prime_formula.value)
                                      : ojson("infinity");
      o["formula_ambiguous"] = r.kappa_prime_formula.ambiguous;
      if (!r.prime_computed) {
        o["kappa_prime_computed"] = nullptr;
      } else if (r.kappa_prime_computed) {
        o["kappa_prime_computed"] = *r.kappa_prime_computed;
      } else {
        o["kappa_prime_computed"] = "infinity";
      }
      o["method"] = r.method.empty() ? ojson(nullptr) : ojson(r.method);
      o["agreement"] = r.agreement ? ojson(*r.agreement) : ojson(nullptr);
      o["note"] = r.note;
      if (ea.timing) o["elapsed_ms"] = r.elapsed_ms;
      j["rows"].push_back(std::move(o));
    }
    j["summary"] = {{"cells", rows.size()}, {"agree", agree},
                    {"disagree", disagree}, {"ambiguous", ambiguous},
                    {"not_compared", skipped}};
    out << dump(j);
  } else {
    out << "n,k,kappa_formula,kappa_computed,kappa_prime_formula,"
           "formula_ambiguous,kappa_prime_computed,method,agreement,note";
    if (ea.timing) out << ",elapsed_ms";
    out << "\n";
    for (const TableRow& r : rows) {
      out << r.n << ',' << r.k << ',' << r.kappa_formula << ','
          << (r.kappa_computed ? std::to_string(*r.kappa_computed) : "") << ','
          << formula_text(r, "inf") << ','
          << (r.kappa_prime_formula.ambiguous ? "true" : "false") << ','
          << (!r.prime_computed ? std::string()
              : r.kappa_prime_computed ? std::to_string(*r.kappa_prime_computed)
                                       : std::string("inf"))
          << ',' << r.method << ','
          << (r.agreement ? (*r.agreement ? "true" : "false") : "") << ','
          << csv_quote(r.note);
      if (ea.timing) out << ',' << std::fixed << std::setprecision(3) << r.elapsed_ms;
      out << "\n";
    }
    out << "# summary cells=" << rows.size() << " agree=" << agree
        << " disagree=" << disagree << " ambiguous=" << ambiguous
        << " not_compared=" << skipped << "\n";
  }
  return disagree ? kExitInvalid : kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact connectivity toolkit for uniform subset graphs", "usg"};
  app.require_subcommand(1);

  GraphArgs gen_g, kappa_g, super_g, wit_g, path_g;
  EngineArgs super_e, table_e;
  std::string format = "dimacs";
  bool kappa_timing = false;
  std::string kind = "jn2", triple = "1,2,3", relabel;
  PathArgs path_a;
  std::string graph_path, cert_path;
  TableArgs table_a;

  auto* gen = app.add_subcommand("gen", "write G(n,k,t)");
  gen_g.add(gen);
  gen->add_option("--format", format, "dimacs | json | edge-list")
      ->check(CLI::IsMember({"dimacs", "json", "edge-list"}));

  auto* kappa = app.add_subcommand("kappa", "vertex connectivity");
  kappa_g.add(kappa);
  kappa->add_flag("--timing", kappa_timing, "add elapsed time")
      ->envname("USG_TIMING");

  auto* superkappa = app.add_subcommand("superkappa", "super connectivity");
  super_g.add(superkappa);
  super_e.add(superkappa);

  auto* witness = app.add_subcommand("witness", "constructed super cuts");
  wit_g.add(witness, false);
  witness->add_option("--kind", kind, "jn2 | edge-neighborhood")
      ->check(CLI::IsMember({"jn2", "edge-neighborhood"}));
  witness->add_option("--triple", triple, "jn2 side triple a,b,c");
  witness->add_option("--relabel", relabel, "permutation of [n], comma separated");

  auto* paths = app.add_subcommand("paths", "disjoint path families");
  path_g.add(paths);
  paths->add_option("--lemma", path_a.lemma, "7 or 8")->check(CLI::IsMember({7, 8}));
  paths->add_option("--case", path_a.case_id, "I | II | III-A | III-B | IV-A | IV-B | IV-C");
  paths->add_option("--alpha", path_a.alpha, "entry, e.g. 2 or k+4");
  paths->add_option("--beta", path_a.beta, "entry, e.g. 1 or k+2");
  paths->add_option("--gamma", path_a.gamma, "entry, e.g. 1 or k+2");
  paths->add_option("--t20", path_a.t20, "by-beta | x13 | x23")
      ->check(CLI::IsMember({"by-beta", "x13", "x23"}));
  paths->add_option("--relabel", path_a.relabel, "permutation of [n], comma separated");

  auto* verify = app.add_subcommand("verify", "re-check a stored certificate");
  verify->add_option("--graph", graph_path, "graph file")->required();
  verify->add_option("--cert", cert_path, "certificate file")->required();

  auto* table = app.add_subcommand("table", "closed form against computation");
  table->add_option("--k-min", table_a.k_min);
  table->add_option("--k-max", table_a.k_max);
  table->add_option("--n-min", table_a.n_min);
  table->add_option("--n-max", table_a.n_max);
  table->add_option("--format", table_a.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  table_e.add(table);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(gen_g, format, out);
    if (*kappa) return cmd_kappa(kappa_g, kappa_timing, out);
    if (*superkappa) return cmd_superkappa(super_g, super_e, out);
    if (*witness) {
      if (kind == "edge-neighborhood" && wit_g.k == 0) {
        throw Error(ErrorKind::invalid_params, "edge-neighborhood needs --k");
      }
      return cmd_witness(kind, wit_g, triple, relabel, out);
    }
    if (*paths) return cmd_paths(path_g, path_a, out);
    if (*verify) return cmd_verify(graph_path, cert_path, out);
    if (*table) return cmd_table(table_a, table_e, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_for(e.kind());
  }
  return kExitUsage;
}

}  // namespace usg
