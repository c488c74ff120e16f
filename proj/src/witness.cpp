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

#include "usg/witness.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace usg {

namespace {

SubsetVertex prefix(int k) { return ground_set(k); }

SubsetVertex X(SubsetVertex x, std::initializer_list<Entry> removed,
               std::initializer_list<Entry> added) {
  return exchange(x, removed, added);
}

void append(PathFamily& fam, std::string label, std::vector<SubsetVertex> walk,
            const Relabeling& relabel) {
  // Equal consecutive vertices collapse to one.
  walk.erase(std::unique(walk.begin(), walk.end()), walk.end());
  for (auto& v : walk) v = relabel.apply(v);
  fam.paths.push_back({std::move(label), std::move(walk)});
}

void open_group(PathFamily& fam, std::string name) {
  fam.groups.push_back({std::move(name), 0});
}

void close_group(PathFamily& fam, std::size_t before) {
  fam.groups.back().count = fam.paths.size() - before;
}

}  // namespace

SubsetVertex Relabeling::apply(SubsetVertex v) const {
  if (image.empty()) return v;
  std::uint64_t bits = 0;
  for (Entry e : v.entries()) bits |= std::uint64_t{1} << (apply(e) - 1);
  return SubsetVertex(bits);
}

void Relabeling::validate(int n) const {
  if (image.empty()) return;
  if (static_cast<int>(image.size()) != n) {
    throw Error(ErrorKind::invalid_params, "relabeling must cover [n]");
  }
  std::vector<char> hit(static_cast<std::size_t>(n) + 1, 0);
  for (Entry e : image) {
    if (e < 1 || e > n || hit[static_cast<std::size_t>(e)]) {
      throw Error(ErrorKind::invalid_params, "relabeling is not a permutation");
    }
    hit[static_cast<std::size_t>(e)] = 1;
  }
}

// ---------------------------------------------------------------------------

VertexCut cut_jn2(const UniformSubsetGraph& g, std::array<Entry, 3> triple) {
  const GraphParams& p = g.params();
  if (p.k != 2 || !p.johnson()) {
    throw Error(ErrorKind::unsupported, "cut_jn2 needs J(n,2)");
  }
  if (p.n < 6) {
    throw Error(ErrorKind::unsupported, "J(n,2) has no super vertex-cut for n < 6");
  }
  const SubsetVertex side = SubsetVertex::from_entries(triple);
  if (side.max_entry() > p.n) {
    throw Error(ErrorKind::invalid_entry, "triple outside [n]");
  }
  std::vector<Rank> cut;
  for (Entry a : triple) {
    for (Entry b = 1; b <= p.n; ++b) {
      if (!side.contains(b)) cut.push_back(g.rank(SubsetVertex{a, b}));
    }
  }
  return VertexCut::from_ranks(std::move(cut));
}

VertexCut EdgeNeighborhoodCut::to_cut(const UniformSubsetGraph& g) const {
  std::vector<Rank> ranks;
  for (const auto* part : {&s1, &s2, &s3}) {
    for (SubsetVertex v : *part) ranks.push_back(g.rank(v));
  }
  return VertexCut::from_ranks(std::move(ranks));
}

EdgeNeighborhoodCut cut_edge_neighborhood(int n, int k,
                                          const Relabeling& relabel) {
  if (k < 3 || n < k + 3) {
    throw Error(ErrorKind::unsupported,
                "edge-neighbourhood cut needs k >= 3 and n >= k+3");
  }
  GraphParams{n, k, k - 1}.validate();
  relabel.validate(n);
  const SubsetVertex x = prefix(k);
  EdgeNeighborhoodCut out;
  out.n = n;
  out.k = k;
  out.base = relabel.apply(x);
  out.partner = relabel.apply(swap(x, k, k + 1));
  for (Entry i = 1; i <= k - 1; ++i) {
    out.s1.push_back(relabel.apply(swap(x, i, k + 1)));
  }
  for (Entry j = k + 2; j <= n; ++j) {
    out.s1.push_back(relabel.apply(swap(x, k, j)));
  }
  for (Entry i = 1; i <= k - 1; ++i) {
    for (Entry j = k + 2; j <= n; ++j) {
      out.s2.push_back(relabel.apply(swap(x, i, j)));
      out.s3.push_back(relabel.apply(X(x, {i, k}, {k + 1, j})));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

PathVerification verify_path_family(const UniformSubsetGraph& g,
                                    const PathFamily& fam,
                                    const std::vector<SubsetVertex>& sources,
                                    const std::vector<SubsetVertex>& targets) {
  PathVerification rep;
  const GraphParams& p = g.params();
  auto fail = [&](bool& flag, std::string msg) {
    flag = false;
    rep.failures.push_back(std::move(msg));
  };
  std::unordered_set<std::uint64_t> terminal;
  for (SubsetVertex v : sources) terminal.insert(v.bits());
  for (SubsetVertex v : targets) terminal.insert(v.bits());
  std::unordered_set<std::uint64_t> forbidden;
  for (SubsetVertex v : fam.forbidden) forbidden.insert(v.bits());
  std::unordered_map<std::uint64_t, std::string> owner;

  for (const LabeledPath& path : fam.paths) {
    const auto& vs = path.vertices;
    if (vs.empty()) {
      fail(rep.endpoints, path.label + ": empty path");
      continue;
    }
    bool valid = true;
    for (SubsetVertex v : vs) {
      if (!g.rank_of(v)) {
        fail(rep.vertices_valid, path.label + ": " + v.to_string() +
                                     " is not a vertex");
        valid = false;
      }
    }
    if (!valid) continue;
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
      if (!is_adjacent(vs[i], vs[i + 1], p)) {
        fail(rep.adjacency, path.label + ": " + vs[i].to_string() + " !~ " +
                                vs[i + 1].to_string());
      }
    }
    const auto has = [](const std::vector<SubsetVertex>& set, SubsetVertex v) {
      return std::find(set.begin(), set.end(), v) != set.end();
    };
    if (!has(sources, vs.front())) {
      fail(rep.endpoints, path.label + ": starts at " + vs.front().to_string());
    }
    if (!has(targets, vs.back())) {
      fail(rep.endpoints, path.label + ": ends at " + vs.back().to_string());
    }
    for (std::size_t i = 1; i + 1 < vs.size(); ++i) {
      const SubsetVertex v = vs[i];
      if (terminal.contains(v.bits())) {
        fail(rep.disjoint,
             path.label + ": passes through terminal " + v.to_string());
      }
      const auto [it, fresh] = owner.emplace(v.bits(), path.label);
      if (!fresh) {
        fail(rep.disjoint, path.label + " and " + it->second + " share " +
                               v.to_string());
      }
      if (fam.required_entry && !v.contains(*fam.required_entry)) {
        fail(rep.required_entry, path.label + ": " + v.to_string() +
                                     " lacks entry " +
                                     std::to_string(*fam.required_entry));
      }
      if (forbidden.contains(v.bits())) {
        fail(rep.forbidden_avoided,
             path.label + ": " + v.to_string() + " is forbidden");
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------

Lemma7Config lemma7_config(int n, int k, const Relabeling& relabel) {
  if (k < 3 || n < k + 3) {
    throw Error(ErrorKind::unsupported, "needs k >= 3 and n >= k+3");
  }
  GraphParams{n, k, k - 1}.validate();
  relabel.validate(n);
  Lemma7Config cfg;
  cfg.n = n;
  cfg.k = k;
  cfg.relabel = relabel;
  const SubsetVertex x = prefix(k);
  const SubsetVertex x_kn = swap(x, k, n);
  const SubsetVertex w = X(x, {k - 1, k}, {k + 1, k + 2});
  cfg.x = relabel.apply(x);
  cfg.x_kn = relabel.apply(x_kn);
  cfg.w = relabel.apply(w);

  std::vector<SubsetVertex> s1;
  for (Entry i = 1; i <= k; ++i) {
    for (Entry j = k + 1; j <= n - 1; ++j) s1.push_back(swap(x, i, j));
  }
  std::vector<SubsetVertex> a4;
  for (Entry j = k + 3; j <= n - 1; ++j) a4.push_back(X(x, {k - 1, k}, {k + 1, j}));

  // Neighbours of w outside S1, classified by distance to x_k^n.
  const std::uint64_t full = ground_set(n).bits();
  std::vector<SubsetVertex> nbrs;
  for (std::uint64_t in = w.bits(); in != 0; in &= in - 1) {
    for (std::uint64_t out = full & ~w.bits(); out != 0; out &= out - 1) {
      nbrs.emplace_back((w.bits() & ~(in & (~in + 1))) | (out & (~out + 1)));
    }
  }
  std::sort(nbrs.begin(), nbrs.end());
  for (SubsetVertex v : nbrs) {
    if (std::find(s1.begin(), s1.end(), v) != s1.end()) continue;
    const bool in_a4 = std::find(a4.begin(), a4.end(), v) != a4.end();
    switch (hamming_distance(v, x_kn)) {
      case 1: cfg.a1.push_back(relabel.apply(v)); break;
      case 2:
        if (!in_a4) cfg.a2.push_back(relabel.apply(v));
        break;
      case 3: cfg.a3.push_back(relabel.apply(v)); break;
      default: break;
    }
    if (in_a4) cfg.a4.push_back(relabel.apply(v));
  }
  for (SubsetVertex v : s1) cfg.s1.push_back(relabel.apply(v));
  return cfg;
}

PathFamily lemma7_paths(const Lemma7Config& cfg) {
  const int n = cfg.n;
  const int k = cfg.k;
  Lemma7Config canonical = lemma7_config(n, k, cfg.relabel);
  if (canonical.x != cfg.x || canonical.w != cfg.w ||
      canonical.x_kn != cfg.x_kn || canonical.s1 != cfg.s1 ||
      canonical.a1 != cfg.a1 || canonical.a2 != cfg.a2 ||
      canonical.a3 != cfg.a3 || canonical.a4 != cfg.a4) {
    throw Error(ErrorKind::invalid_config, "Lemma 7 configuration mismatch");
  }
  const Relabeling& rl = cfg.relabel;
  const SubsetVertex x = prefix(k);
  const SubsetVertex w = X(x, {k - 1, k}, {k + 1, k + 2});
  const SubsetVertex x_kn = swap(x, k, n);

  PathFamily fam;
  fam.forbidden = cfg.s1;
  fam.sources = {cfg.w};
  fam.targets = {cfg.x, cfg.x_kn};

  std::size_t mark = fam.paths.size();
  open_group(fam, "A1");
  append(fam, "I[n]", {w, X(x, {k - 1, k}, {k + 1, n}), x_kn}, rl);
  append(fam, "I[k+2]", {w, X(x, {k - 1, k}, {k + 2, n}), x_kn}, rl);
  close_group(fam, mark);

  mark = fam.paths.size();
  open_group(fam, "A2");
  for (Entry j = k + 3; j <= n - 1; ++j) {
    append(fam, "II.i[j=" + std::to_string(j) + "]",
           {w, X(x, {k - 1, k}, {k + 2, j}), X(x, {k - 1, k}, {n, j}), x_kn},
           rl);
  }
  for (Entry i = 1; i <= k - 2; ++i) {
    append(fam, "II.ii[i=" + std::to_string(i) + "]",
           {w, X(x, {i, k}, {k + 1, k + 2}), X(x, {i, k}, {k + 1, n}), x_kn},
           rl);
  }
  for (Entry i = 1; i <= k - 2; ++i) {
    append(fam, "II.iii[i=" + std::to_string(i) + "]",
           {w, X(x, {i, k - 1, k}, {k + 1, k + 2, n}), X(x, {i, k}, {k + 2, n}),
            x_kn},
           rl);
  }
  close_group(fam, mark);

  mark = fam.paths.size();
  open_group(fam, "A3");
  for (Entry i = 1; i <= k - 2; ++i) {
    std::vector<Entry> js{k};
    for (Entry j = k + 3; j <= n - 1; ++j) js.push_back(j);
    for (Entry j : js) {
      append(fam,
             "III[i=" + std::to_string(i) + ",j=" + std::to_string(j) + "]",
             {w, X(x, {i, k - 1, k}, {k + 1, k + 2, j}),
              X(x, {i, k - 1, k}, {k + 1, n, j}), X(x, {i, k}, {n, j}), x_kn},
             rl);
    }
  }
  close_group(fam, mark);

  // For k = 3 the entry 2 coincides with k-1, so the pivot is entry 1.
  const Entry pivot = k >= 4 ? 2 : 1;
  // A4 is empty when n = k+3; w then has only k(n-k)-4 usable neighbours.
  mark = fam.paths.size();
  open_group(fam, "A4");
  if (n >= k + 4) {
    append(fam, "IV",
           {w, X(x, {k - 1, k}, {k + 1, k + 3}),
            X(x, {pivot, k - 1}, {k + 1, k + 3}),
            X(x, {pivot, k - 1}, {k + 3, n}), swap(x, k - 1, n), x},
           rl);
  }
  close_group(fam, mark);
  return fam;
}

// ---------------------------------------------------------------------------

std::string_view to_string(Lemma8Case c) {
  switch (c) {
    case Lemma8Case::I: return "I";
    case Lemma8Case::II: return "II";
    case Lemma8Case::III_A: return "III-A";
    case Lemma8Case::III_B: return "III-B";
    case Lemma8Case::IV_A: return "IV-A";
    case Lemma8Case::IV_B: return "IV-B";
    case Lemma8Case::IV_C: return "IV-C";
  }
  return "?";
}

std::optional<Lemma8Case> parse_lemma8_case(std::string_view s) {
  for (Lemma8Case c : {Lemma8Case::I, Lemma8Case::II, Lemma8Case::III_A,
                       Lemma8Case::III_B, Lemma8Case::IV_A, Lemma8Case::IV_B,
                       Lemma8Case::IV_C}) {
    if (s == to_string(c)) return c;
  }
  return std::nullopt;
}

std::string symbolic_entry(Entry e, int k) {
  if (e > k) return "k+" + std::to_string(e - k);
  return std::to_string(e);
}

std::optional<Entry> parse_symbolic_entry(std::string_view s, int k) {
  int offset = 0;
  if (s == "k") return k;
  if (s.starts_with("k+")) {
    s.remove_prefix(2);
    offset = k;
  }
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return offset + value;
}

namespace {

struct CaseShape {
  std::vector<Entry> alphas, betas, gammas;
};

CaseShape case_shape(Lemma8Case c, int k) {
  switch (c) {
    case Lemma8Case::I: return {{1, k + 2}, {2, k + 1}, {}};
    case Lemma8Case::II: return {{k + 3, k + 4}, {1, k + 2, k + 3}, {1, k + 2}};
    case Lemma8Case::III_A: return {{}, {1, k + 2}, {}};
    case Lemma8Case::III_B: return {{2, k + 1, k + 3, k + 4}, {}, {}};
    case Lemma8Case::IV_A: return {{}, {1, k + 2}, {}};
    case Lemma8Case::IV_B: return {{2, k + 1}, {1, k + 2}, {}};
    case Lemma8Case::IV_C: return {{2, k + 1, k + 3, k + 4}, {}, {}};
  }
  return {};
}

std::optional<Entry> pick(const std::vector<Entry>& allowed,
                          std::optional<Entry> given, const char* name) {
  if (allowed.empty()) {
    if (given) {
      throw Error(ErrorKind::invalid_config,
                  std::string("case takes no ") + name);
    }
    return std::nullopt;
  }
  if (!given) return allowed.front();
  if (std::find(allowed.begin(), allowed.end(), *given) == allowed.end()) {
    throw Error(ErrorKind::invalid_config,
                std::string(name) + "=" + std::to_string(*given) +
                    " is not allowed for this case");
  }
  return given;
}

// Which of z_3..z_k are missing from a vertex.
std::vector<Entry> missing_middle(SubsetVertex v, int k) {
  std::vector<Entry> out;
  for (Entry e = 3; e <= k; ++e) {
    if (!v.contains(e)) out.push_back(e);
  }
  return out;
}

}  // namespace

Lemma8Config lemma8_config(int n, int k, Lemma8Case c,
                           std::optional<Entry> alpha, std::optional<Entry> beta,
                           std::optional<Entry> gamma,
                           const Relabeling& relabel) {
  if (k < 3 || n < k + 3) {
    throw Error(ErrorKind::unsupported, "needs k >= 3 and n >= k+3");
  }
  GraphParams{n, k, k - 1}.validate();
  relabel.validate(n);
  const bool case_iv = c == Lemma8Case::IV_A || c == Lemma8Case::IV_B ||
                       c == Lemma8Case::IV_C;
  if (case_iv && k < 4) {
    throw Error(ErrorKind::unsupported,
                "Case IV needs two distinct entries among z_3..z_k (k >= 4)");
  }
  const CaseShape shape = case_shape(c, k);
  Lemma8Config cfg;
  cfg.n = n;
  cfg.k = k;
  cfg.r = n;
  cfg.relabel = relabel;
  cfg.case_id = c;
  cfg.alpha = pick(shape.alphas, alpha, "alpha");
  cfg.beta = pick(shape.betas, beta, "beta");
  cfg.gamma = pick(shape.gammas, gamma, "gamma");

  const SubsetVertex x = prefix(k);
  cfg.x = x;
  cfg.u = swap(x, 1, k + 1);
  cfg.v = swap(x, 2, k + 2);
  const Entry a = cfg.alpha.value_or(0);
  const Entry b = cfg.beta.value_or(0);
  const Entry g = cfg.gamma.value_or(0);
  // Largest fresh entry the case needs; fresh entries must lie below r = n.
  Entry fresh = k + 2;
  switch (c) {
    case Lemma8Case::I:
      cfg.u_bar = X(x, {1, 2}, {b, k + 3});
      cfg.v_bar = X(x, {1, 2}, {a, k + 4});
      fresh = k + 4;
      break;
    case Lemma8Case::II:
      cfg.u_bar = X(x, {1, 3}, {k + 1, b});
      cfg.v_bar = X(x, {1, 2}, {g, a});
      fresh = std::max(a, b);
      break;
    case Lemma8Case::III_A:
      cfg.u_bar = X(x, {1, 3}, {k + 1, b});
      cfg.v_bar = X(x, {2, 3}, {k + 2, k + 3});
      fresh = k + 3;
      break;
    case Lemma8Case::III_B:
      cfg.u_bar = X(x, {1, 3}, {k + 1, k + 3});
      cfg.v_bar = X(x, {2, 3}, {k + 2, a});
      fresh = std::max(k + 3, a);
      break;
    case Lemma8Case::IV_A:
      cfg.u_bar = X(x, {1, 3}, {k + 1, b});
      cfg.v_bar = X(x, {2, 4}, {k + 2, k + 3});
      fresh = k + 3;
      break;
    case Lemma8Case::IV_B:
      cfg.u_bar = X(x, {1, 3}, {k + 1, b});
      cfg.v_bar = X(x, {2, 4}, {k + 2, a});
      fresh = k + 2;
      break;
    case Lemma8Case::IV_C:
      cfg.u_bar = X(x, {1, 3}, {k + 1, k + 3});
      cfg.v_bar = X(x, {2, 4}, {k + 2, a});
      fresh = std::max(k + 3, a);
      break;
  }
  if (fresh > n - 1) {
    throw Error(ErrorKind::unsupported,
                "case " + std::string(to_string(c)) + " needs entry " +
                    symbolic_entry(fresh, k) + " < r = " + std::to_string(n));
  }
  validate_lemma8_config(cfg);
  return cfg;
}

void validate_lemma8_config(const Lemma8Config& cfg) {
  const int k = cfg.k;
  const GraphParams p = johnson(cfg.n, k);
  auto bad = [](const std::string& why) {
    throw Error(ErrorKind::invalid_config, why);
  };
  for (SubsetVertex s : {cfg.x, cfg.u, cfg.v, cfg.u_bar, cfg.v_bar}) {
    if (s.size() != k || s.max_entry() > cfg.n) bad("vertex outside J(n,k)");
  }
  if (hamming_distance(cfg.u, cfg.v) != 2) bad("d(u,v) must be 2");
  if (!is_adjacent(cfg.u, cfg.x, p) || !is_adjacent(cfg.v, cfg.x, p)) {
    bad("x must be a common neighbour of u and v");
  }
  if (!is_adjacent(cfg.u, cfg.u_bar, p)) bad("u must be adjacent to u_bar");
  if (!is_adjacent(cfg.v, cfg.v_bar, p)) bad("v must be adjacent to v_bar");
  for (SubsetVertex s : {cfg.u, cfg.v, cfg.u_bar, cfg.v_bar}) {
    if (s.contains(cfg.r)) bad("entry r must be absent from u, v, u_bar, v_bar");
  }
  for (SubsetVertex a : {cfg.u, cfg.u_bar}) {
    for (SubsetVertex b : {cfg.v, cfg.v_bar}) {
      if (a == b || is_adjacent(a, b, p)) {
        bad("the two sides must be distinct and non-adjacent");
      }
    }
  }
  const auto mu = missing_middle(cfg.u_bar, k);
  const auto mv = missing_middle(cfg.v_bar, k);
  Lemma8Case top = Lemma8Case::I;
  if (mu.empty() && mv.empty()) {
    top = Lemma8Case::I;
  } else if (mu.empty() != mv.empty()) {
    top = Lemma8Case::II;
  } else if (mu == mv) {
    top = Lemma8Case::III_A;
  } else {
    top = Lemma8Case::IV_A;
  }
  auto family = [](Lemma8Case c) {
    switch (c) {
      case Lemma8Case::III_B: return Lemma8Case::III_A;
      case Lemma8Case::IV_B:
      case Lemma8Case::IV_C: return Lemma8Case::IV_A;
      default: return c;
    }
  };
  if (family(cfg.case_id) != top) {
    bad("case " + std::string(to_string(cfg.case_id)) +
        " inconsistent with the entries of u_bar and v_bar");
  }
}

PathFamily lemma8_paths(const Lemma8Config& cfg) {
  if (cfg.k < 3 || cfg.n < cfg.k + 3) {
    throw Error(ErrorKind::unsupported, "needs k >= 3 and n >= k+3");
  }
  validate_lemma8_config(cfg);
  const int k = cfg.k;
  const Entry n = cfg.r;
  const SubsetVertex x = cfg.x;
  const SubsetVertex u = cfg.u, v = cfg.v, ub = cfg.u_bar, vb = cfg.v_bar;
  const Entry a = cfg.alpha.value_or(0);
  const Entry b = cfg.beta.value_or(0);
  const Entry g = cfg.gamma.value_or(0);
  const Relabeling& rl = cfg.relabel;

  PathFamily fam;
  fam.required_entry = rl.apply(n);
  fam.sources = {rl.apply(u), rl.apply(ub)};
  fam.targets = {rl.apply(v), rl.apply(vb)};

  auto idx = [](const char* base, Entry i) {
    return std::string(base) + std::to_string(i);
  };
  auto P = [&](Entry j) {
    append(fam, idx("P_", j),
           {u, X(x, {1, j}, {k + 1, n}), X(x, {2, j}, {k + 1, n}),
            X(x, {2, j}, {k + 2, n}), v},
           rl);
  };
  // P_3 always exists; P_4 only when k >= 4.
  auto P3 = [&] { P(3); };
  auto P4 = [&] {
    if (k >= 4) P(4);
  };
  auto group = [&](std::string name, auto&& body) {
    const std::size_t mark = fam.paths.size();
    open_group(fam, std::move(name));
    body();
    close_group(fam, mark);
  };
  auto T6 = [&] {
    append(fam, "T_6",
           {u, X(x, {1, 3}, {k + 1, n}), X(x, {1, 3}, {k + 2, n}),
            X(x, {2, 3}, {k + 2, n}), v},
           rl);
  };
  auto T21 = [&] {
    append(fam, "T_21",
           {u, X(x, {1, 4}, {k + 1, n}), X(x, {1, 4}, {k + 2, n}),
            X(x, {2, 4}, {k + 2, n}), v},
           rl);
  };

  group("P_j", [&] {
    for (Entry j = 5; j <= k; ++j) P(j);
  });
  group("T_1,T_2", [&] {
    append(fam, "T_1", {u, swap(x, 1, n), X(x, {1, 2}, {k + 2, n}), v}, rl);
    append(fam, "T_2", {u, X(x, {1, 2}, {k + 1, n}), swap(x, 2, n), v}, rl);
  });

  switch (cfg.case_id) {
    case Lemma8Case::I:
      group("Q_i", [&] {
        for (Entry i = 3; i <= k; ++i) {
          append(fam, idx("Q_", i),
                 {ub, X(x, {1, 2, i}, {b, k + 3, n}),
                  X(x, {1, 2, i}, {a, k + 3, n}), X(x, {1, 2, i}, {a, k + 4, n}),
                  vb},
                 rl);
        }
      });
      group("tail", [&] {
        append(fam, "T_3",
               {ub, X(x, {1, 2}, {k + 3, n}), X(x, {1, 2}, {k + 4, n}), vb}, rl);
        P3();
        P4();
      });
      break;

    case Lemma8Case::II:
      group("Q_i", [&] {
        for (Entry i = 4; i <= k; ++i) {
          append(fam, idx("Q_", i),
                 {ub, X(x, {1, 3, i}, {k + 1, b, n}),
                  X(x, {1, 3, i}, {k + 1, a, n}),
                  X(x, {1, 2, 3, i}, {k + 1, a, g, n}),
                  X(x, {1, 2, i}, {a, g, n}), vb},
                 rl);
        }
      });
      group("tail", [&] {
        append(fam, "T_4",
               {ub, X(x, {1, 3}, {b, n}), X(x, {1, 3}, {a, n}),
                X(x, {1, 2, 3}, {a, g, n}), vb},
               rl);
        append(fam, "T_5",
               {ub, X(x, {1, 2, 3}, {k + 1, b, n}),
                X(x, {1, 2, 3}, {k + 1, a, n}), X(x, {1, 2}, {a, n}), vb},
               rl);
        if (b == 1) {
          P4();
          T6();
        } else {
          P3();
          P4();
        }
      });
      break;

    case Lemma8Case::III_A:
      group("Q_i", [&] {
        for (Entry i = 4; i <= k; ++i) {
          append(fam, idx("Q_", i),
                 {ub, X(x, {1, 3, i}, {k + 1, b, n}),
                  X(x, {1, 2, 3, i}, {k + 1, k + 3, b, n}),
                  X(x, {2, 3, i}, {k + 2, k + 3, n}), vb},
                 rl);
        }
      });
      group("tail", [&] {
        append(fam, "T_7",
               {ub, X(x, {1, 3}, {b, n}), X(x, {1, 3}, {k + 3, n}),
                X(x, {1, 2, 3}, {k + 2, k + 3, n}), vb},
               rl);
        append(fam, "T_8",
               {ub, X(x, {1, 2, 3}, {k + 1, b, n}),
                X(x, {1, 2, 3}, {k + 1, k + 3, n}), X(x, {2, 3}, {k + 3, n}),
                vb},
               rl);
        if (b == 1) {
          P4();
          T6();
        } else {
          P3();
          P4();
        }
      });
      break;

    case Lemma8Case::III_B:
      group("Q_i", [&] {
        for (Entry i = 4; i <= k; ++i) {
          append(fam, idx("Q_", i),
                 {ub, X(x, {1, 3, i}, {k + 1, k + 3, n}),
                  X(x, {3, i}, {k + 3, n}), X(x, {2, 3, i}, {k + 2, k + 3, n}),
                  X(x, {2, 3, i}, {k + 2, a, n}), vb},
                 rl);
        }
      });
      group("tail", [&] {
        if (a == k + 3 || a == k + 4) {
          P3();
          P4();
          append(fam, "T_9",
                 {ub, X(x, {1, 3}, {k + 3, n}), X(x, {1, 3}, {a, n}),
                  X(x, {1, 2, 3}, {k + 2, a, n}), vb},
                 rl);
          append(fam, "T_10",
                 {ub, X(x, {1, 2, 3}, {k + 1, k + 3, n}),
                  X(x, {1, 2, 3}, {k + 1, a, n}), X(x, {2, 3}, {a, n}), vb},
                 rl);
        } else {
          const Entry a_bar = a == 2 ? k + 1 : 2;
          P4();
          append(fam, "T_11",
                 {ub, X(x, {1, 2, 3}, {k + 3, a, n}),
                  X(x, {1, 2, 3}, {k + 2, a, n}), vb},
                 rl);
          append(fam, "T_12",
                 {ub, X(x, {1, 2, 3}, {k + 3, a_bar, n}),
                  X(x, {2, 3}, {k + 3, n}), X(x, {2, 3}, {a, n}), vb},
                 rl);
          append(fam, "T_13",
                 {u, X(x, {1, 3}, {k + 1, n}), X(x, {2, 3}, {a_bar, n}),
                  X(x, {2, 3}, {k + 2, n}), v},
                 rl);
        }
      });
      break;

    case Lemma8Case::IV_A:
      group("Q_i", [&] {
        for (Entry i = 5; i <= k; ++i) {
          append(fam, idx("Q_", i),
                 {ub, X(x, {1, 3, i}, {k + 1, b, n}),
                  X(x, {1, 2, 3, i}, {k + 1, k + 3, b, n}),
                  X(x, {1, 2, i}, {k + 3, b, n}),
                  X(x, {2, 4, i}, {k + 2, k + 3, n}), vb},
                 rl);
        }
      });
      group("tail", [&] {
        append(fam, "T_14",
               {ub, X(x, {1, 3, 4}, {k + 1, b, n}),
                X(x, {1, 3, 4}, {k + 3, b, n}),
                X(x, {2, 3, 4}, {k + 2, k + 3, n}), vb},
               rl);
        append(fam, "T_15",
               {ub, X(x, {1, 3}, {b, n}), swap(x, 3, n), swap(x, 4, n),
                X(x, {2, 4}, {k + 3, n}), vb},
               rl);
        append(fam, "T_16",
               {ub, X(x, {1, 2, 3}, {k + 1, b, n}),
                X(x, {1, 2, 3}, {k + 3, b, n}),
                X(x, {1, 2, 3}, {k + 2, k + 3, n}),
                X(x, {1, 2, 4}, {k + 2, k + 3, n}), vb},
               rl);
        if (b == 1) {
          P4();
          T6();
        } else {
          P3();
          P4();
        }
      });
      break;

    case Lemma8Case::IV_B:
      group("Q_i", [&] {
        for (Entry i = 5; i <= k; ++i) {
          append(fam, idx("Q_", i),
                 {ub, X(x, {1, 3, i}, {k + 1, b, n}),
                  X(x, {1, 3, i}, {k + 1, k + 2, n}),
                  X(x, {1, 4, i}, {k + 1, k + 2, n}),
                  X(x, {2, 4, i}, {k + 2, a, n}), vb},
                 rl);
        }
      });
      group("tail", [&] {
        append(fam, "T_17",
               {ub, X(x, {1, 3, 4}, {k + 1, b, n}),
                X(x, {1, 3, 4}, {k + 1, k + 2, n}),
                X(x, {2, 3, 4}, {k + 2, a, n}), vb},
               rl);
        append(fam, "T_18",
               {ub, X(x, {1, 2, 3}, {k + 1, b, n}),
                X(x, {1, 2, 3}, {k + 1, k + 2, n}),
                X(x, {1, 2, 4}, {k + 1, k + 2, n}),
                X(x, {1, 2, 4}, {k + 2, a, n}), vb},
               rl);
        append(fam, "T_19",
               {ub, X(x, {1, 3}, {b, n}), swap(x, 3, n), swap(x, 4, n),
                X(x, {2, 4}, {a, n}), vb},
               rl);
        if (a == 2) {
          bool use_13 = b == 1;
          if (cfg.t20 == T20Vertex::x13_k2n) use_13 = true;
          if (cfg.t20 == T20Vertex::x23_k1n) use_13 = false;
          const SubsetVertex omega =
              use_13 ? X(x, {1, 3}, {k + 2, n}) : X(x, {2, 3}, {k + 1, n});
          P4();
          append(fam, "T_20",
                 {u, X(x, {1, 3}, {k + 1, n}), omega, X(x, {2, 3}, {k + 2, n}),
                  v},
                 rl);
        } else if (b == k + 2) {
          P3();
          T21();
        } else {
          T6();
          T21();
        }
      });
      break;

    case Lemma8Case::IV_C:
      group("Q_i", [&] {
        for (Entry i = 5; i <= k; ++i) {
          append(fam, idx("Q_", i),
                 {ub, X(x, {1, 3, i}, {k + 1, k + 3, n}),
                  X(x, {1, 3, i}, {k + 2, k + 3, n}),
                  X(x, {1, 4, i}, {k + 2, k + 3, n}),
                  X(x, {2, 4, i}, {k + 2, k + 3, n}),
                  X(x, {2, 4, i}, {k + 2, a, n}), vb},
                 rl);
        }
      });
      // ū is not adjacent to x_{2,3,4}^{k+1,k+3,n}; T_23 and T_25 reach it
      // through x_{1,3,4}^{k+1,k+3,n}.
      group("tail", [&] {
        append(fam, "T_22",
               {ub, X(x, {1, 3}, {k + 3, n}), X(x, {2, 3}, {k + 3, n}),
                X(x, {2, 3}, {a, n}), X(x, {2, 4}, {a, n}), vb},
               rl);
        auto T25 = [&] {
          append(fam, "T_25",
                 {ub, X(x, {1, 3, 4}, {k + 1, k + 3, n}),
                  X(x, {2, 3, 4}, {k + 1, k + 3, n}),
                  X(x, {2, 3, 4}, {k + 3, a, n}),
                  X(x, {2, 3, 4}, {k + 2, a, n}), vb},
                 rl);
        };
        auto T26 = [&] {
          append(fam, "T_26",
                 {ub, X(x, {1, 2, 3}, {k + 1, k + 3, n}),
                  X(x, {1, 2}, {k + 3, n}), X(x, {1, 2, 4}, {k + 3, a, n}),
                  X(x, {1, 2, 4}, {k + 2, a, n}), vb},
                 rl);
        };
        if (a == k + 3 || a == k + 4) {
          P3();
          P4();
          append(fam, "T_23",
                 {ub, X(x, {1, 3, 4}, {k + 1, k + 3, n}),
                  X(x, {2, 3, 4}, {k + 1, k + 3, n}),
                  X(x, {2, 3, 4}, {k + 1, a, n}),
                  X(x, {2, 3, 4}, {k + 2, a, n}), vb},
                 rl);
          append(fam, "T_24",
                 {ub, X(x, {1, 2, 3}, {k + 1, k + 3, n}),
                  X(x, {1, 2, 3}, {k + 1, a, n}),
                  X(x, {1, 2, 4}, {k + 1, a, n}),
                  X(x, {1, 2, 4}, {k + 2, a, n}), vb},
                 rl);
        } else if (a == 2) {
          P3();
          P4();
          T25();
          T26();
        } else {
          T6();
          T21();
          T25();
          T26();
        }
      });
      break;
  }
  return fam;
}

Lemma8Enumeration enumerate_lemma8_cases(int n, int k) {
  if (k < 3 || n < k + 3) {
    throw Error(ErrorKind::unsupported, "needs k >= 3 and n >= k+3");
  }
  Lemma8Enumeration out;
  for (Lemma8Case c : {Lemma8Case::I, Lemma8Case::II, Lemma8Case::III_A,
                       Lemma8Case::III_B, Lemma8Case::IV_A, Lemma8Case::IV_B,
                       Lemma8Case::IV_C}) {
    CaseShape shape = case_shape(c, k);
    auto opts = [](const std::vector<Entry>& v) {
      std::vector<std::optional<Entry>> o;
      for (Entry e : v) o.emplace_back(e);
      if (o.empty()) o.emplace_back(std::nullopt);
      return o;
    };
    for (auto b : opts(shape.betas)) {
      for (auto g : opts(shape.gammas)) {
        for (auto a : opts(shape.alphas)) {
          try {
            out.configs.push_back(lemma8_config(n, k, c, a, b, g));
          } catch (const Error& e) {
            if (e.kind() != ErrorKind::unsupported) throw;
            out.omitted.push_back({c, a, b, g, e.what()});
          }
        }
      }
    }
  }
  return out;
}

}  // namespace usg
