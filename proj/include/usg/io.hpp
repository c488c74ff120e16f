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

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "usg/connectivity.hpp"
#include "usg/formula.hpp"
#include "usg/subset_graph.hpp"
#include "usg/witness.hpp"

namespace usg {

using ojson = nlohmann::ordered_json;

enum class GraphFormat { dimacs, json, edge_list };
std::string_view to_string(GraphFormat f);
std::optional<GraphFormat> parse_graph_format(std::string_view s);

/// Deterministic serialization. Vertex numbers are 1-based canonical ranks.
void write_graph(std::ostream& out, const UniformSubsetGraph& g,
                 GraphFormat format);
std::string graph_to_string(const UniformSubsetGraph& g, GraphFormat format);

/// Parses any of the three formats (detected from the first token), rebuilds
/// G(n,k,t) and checks that the stored vertices and edges match it. Throws
/// parse on malformed or inconsistent input.
UniformSubsetGraph read_graph(std::string_view text);

ojson subset_json(SubsetVertex v);
/// Throws rank_range if the array is not a vertex of g.
SubsetVertex subset_from_json(const nlohmann::json& j,
                              const UniformSubsetGraph& g);

ojson graph_params_json(const GraphParams& p);

struct ReportExtras {
  std::optional<bool> agreement;
  std::vector<std::string> notes;
  bool timing = false;
};

/// {graph, kappa, kappa_prime, witness, method, agreement, notes, ...}.
ojson connectivity_report_json(const UniformSubsetGraph& g,
                               const ConnectivityReport& rep,
                               const ReportExtras& extras);

/// {graph, kappa, witness:{cut, components}, method, notes}.
ojson kappa_report_json(const UniformSubsetGraph& g,
                        const GlobalConnectivity& rep,
                        const ReportExtras& extras);

/// Certificate of kind "cut".
ojson cut_certificate_json(const UniformSubsetGraph& g,
                           const CutCertificate& cert, std::string_view label);

struct PathCertificateMeta {
  int lemma = 0;
  std::optional<Lemma8Case> case_id;
  int k = 0;
  std::optional<Entry> alpha, beta, gamma;
  std::size_t expected_paths = 0;
  bool exact_count = false;  // the count must equal expected_paths
};

/// Certificate of kind "paths", with the verification outcome.
ojson path_certificate_json(const PathFamily& fam,
                            const PathVerification& verification,
                            const PathCertificateMeta& meta,
                            const GraphParams& params);

struct CertificateCheck {
  std::string kind;
  bool valid = false;
  std::vector<std::string> violations;
};

/// Re-checks a stored certificate against g. Throws parse on malformed
/// documents and rank_range on subsets that are not vertices of g.
CertificateCheck verify_certificate(const UniformSubsetGraph& g,
                                    const nlohmann::json& cert);

/// Deterministic text for a JSON document: two-space indent, trailing
/// newline.
std::string dump(const ojson& j);

}  // namespace usg
