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

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "usg/connectivity.hpp"
#include "usg/subset_graph.hpp"

namespace usg {

/// A permutation of [n] applied to every constructed vertex. Empty means
/// identity. image[e-1] is the new label of entry e.
struct Relabeling {
  std::vector<Entry> image;

  Entry apply(Entry e) const {
    return image.empty() ? e : image.at(static_cast<std::size_t>(e - 1));
  }
  SubsetVertex apply(SubsetVertex v) const;
  // Throws invalid_params unless image is empty or a permutation of [n].
  void validate(int n) const;
};

// ---------------------------------------------------------------------------
// Cuts

/// {αβ : α ∈ triple, β ∉ triple} in J(n,2); size 3(n−3). Requires n >= 6.
VertexCut cut_jn2(const UniformSubsetGraph& g, std::array<Entry, 3> triple);

/// All neighbours of the edge x ~ x_k^{k+1} with x = {1..k}, split into
/// common neighbours (s1), neighbours of x only (s2) and of the partner
/// only (s3).
struct EdgeNeighborhoodCut {
  int n = 0;
  int k = 0;
  SubsetVertex base;
  SubsetVertex partner;
  std::vector<SubsetVertex> s1, s2, s3;

  std::size_t size() const { return s1.size() + s2.size() + s3.size(); }
  VertexCut to_cut(const UniformSubsetGraph& g) const;
};

/// Requires k >= 3 and n >= k+3.
EdgeNeighborhoodCut cut_edge_neighborhood(int n, int k,
                                          const Relabeling& relabel = {});

// ---------------------------------------------------------------------------
// Path families

struct LabeledPath {
  std::string label;
  std::vector<SubsetVertex> vertices;
};

// A named template group and how many paths it contributed (possibly 0).
struct PathGroup {
  std::string name;
  std::size_t count = 0;
};

struct PathFamily {
  std::vector<LabeledPath> paths;
  std::vector<PathGroup> groups;
  std::optional<Entry> required_entry;
  std::vector<SubsetVertex> forbidden;
  std::vector<SubsetVertex> sources;
  std::vector<SubsetVertex> targets;
};

struct PathVerification {
  bool vertices_valid = true;   // every vertex is a vertex of g
  bool adjacency = true;        // (a)
  bool disjoint = true;         // (b)
  bool required_entry = true;   // (c)
  bool forbidden_avoided = true;  // (d)
  bool endpoints = true;        // (e)
  std::vector<std::string> failures;

  bool pass() const {
    return vertices_valid && adjacency && disjoint && required_entry &&
           forbidden_avoided && endpoints;
  }
};

/// Checks a family against g. Failures are reported, never thrown.
PathVerification verify_path_family(const UniformSubsetGraph& g,
                                    const PathFamily& fam,
                                    const std::vector<SubsetVertex>& sources,
                                    const std::vector<SubsetVertex>& targets);
inline PathVerification verify_path_family(const UniformSubsetGraph& g,
                                           const PathFamily& fam) {
  return verify_path_family(g, fam, fam.sources, fam.targets);
}

// ---------------------------------------------------------------------------
// Paths from w to {x, x_k^n} avoiding S1 = N(x) − β_n.

struct Lemma7Config {
  int n = 0;
  int k = 0;
  Relabeling relabel;
  SubsetVertex x;
  SubsetVertex x_kn;  // x_k^n
  SubsetVertex w;     // x_{k-1,k}^{k+1,k+2}
  std::vector<SubsetVertex> s1;
  // Neighbours of w outside s1, classified by Hamming distance to x_k^n.
  std::vector<SubsetVertex> a1, a2, a3, a4;
};

/// Canonical configuration, with classes computed from their definitions.
Lemma7Config lemma7_config(int n, int k, const Relabeling& relabel = {});

/// (k−1)(n−k) paths: two through A1, one per A2 vertex, one per A3 vertex
/// and one through an A4 vertex ending at x.
PathFamily lemma7_paths(const Lemma7Config& cfg);

// ---------------------------------------------------------------------------
// 2k−1 paths from {u, ū} to {v, v̄} whose internal vertices contain z_r.

enum class Lemma8Case { I, II, III_A, III_B, IV_A, IV_B, IV_C };
std::string_view to_string(Lemma8Case c);
std::optional<Lemma8Case> parse_lemma8_case(std::string_view s);

// The two choices of the intermediate vertex of T20.
enum class T20Vertex { by_beta, x13_k2n, x23_k1n };

struct Lemma8Config {
  int n = 0;
  int k = 0;
  Entry r = 0;
  Relabeling relabel;
  Lemma8Case case_id = Lemma8Case::I;
  // Sub-parameters as canonical entry values (unset when unused).
  std::optional<Entry> alpha, beta, gamma;
  T20Vertex t20 = T20Vertex::by_beta;
  // Canonical vertices (relabel applied when paths are emitted).
  SubsetVertex x, u, v, u_bar, v_bar;
};

/// Builds the canonical config for a case and sub-parameters. Throws
/// unsupported when (n,k) is out of range or the case needs an entry that
/// does not exist below r = n, invalid_config when the sub-parameters are
/// not among those allowed for the case.
Lemma8Config lemma8_config(int n, int k, Lemma8Case c,
                           std::optional<Entry> alpha = std::nullopt,
                           std::optional<Entry> beta = std::nullopt,
                           std::optional<Entry> gamma = std::nullopt,
                           const Relabeling& relabel = {});

/// Checks the config invariants; throws invalid_config on violation.
void validate_lemma8_config(const Lemma8Config& cfg);

PathFamily lemma8_paths(const Lemma8Config& cfg);

struct OmittedLemma8Case {
  Lemma8Case case_id;
  std::optional<Entry> alpha, beta, gamma;
  std::string reason;
};

struct Lemma8Enumeration {
  std::vector<Lemma8Config> configs;
  std::vector<OmittedLemma8Case> omitted;
};

/// One config per (case, sub-parameter) combination realizable at (n,k);
/// the others are listed as omitted with a reason.
Lemma8Enumeration enumerate_lemma8_cases(int n, int k);

/// Renders an entry relative to k ("k+3") when it lies above k.
std::string symbolic_entry(Entry e, int k);
/// Parses "7", "k+3" or "k" for a given k.
std::optional<Entry> parse_symbolic_entry(std::string_view s, int k);

}  // namespace usg
