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

#include "usg/subset.hpp"

#include <sstream>

namespace usg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_params: return "invalid-params";
    case ErrorKind::invalid_vertex: return "invalid-vertex";
    case ErrorKind::invalid_swap: return "invalid-swap";
    case ErrorKind::invalid_entry: return "invalid-entry";
    case ErrorKind::capacity: return "capacity";
    case ErrorKind::unsupported: return "unsupported";
    case ErrorKind::degenerate_graph: return "degenerate-graph";
    case ErrorKind::not_connected: return "not-connected";
    case ErrorKind::empty_graph: return "empty-graph";
    case ErrorKind::adjacent_terminals: return "adjacent-terminals";
    case ErrorKind::invalid_pair: return "invalid-pair";
    case ErrorKind::no_vertex_cut: return "no-vertex-cut";
    case ErrorKind::too_large: return "too-large";
    case ErrorKind::invalid_config: return "invalid-config";
    case ErrorKind::parse: return "parse";
    case ErrorKind::rank_range: return "rank-range";
  }
  return "unknown";
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > UINT64_MAX) throw Error(ErrorKind::capacity, "binomial overflow");
  }
  return static_cast<std::uint64_t>(r);
}

void GraphParams::validate() const {
  if (n > kMaxGroundSet) {
    throw Error(ErrorKind::capacity,
                "n=" + std::to_string(n) + " exceeds the 64-entry bit set");
  }
  if (n < 1 || k < 1 || k > n) {
    throw Error(ErrorKind::invalid_params, "require 1 <= k <= n, got n=" +
                                               std::to_string(n) +
                                               " k=" + std::to_string(k));
  }
  if (t < 0 || t > k - 1) {
    throw Error(ErrorKind::invalid_params,
                "require 0 <= t <= k-1, got t=" + std::to_string(t));
  }
}

SubsetVertex::SubsetVertex(std::initializer_list<Entry> entries)
    : SubsetVertex(from_entries(std::span(entries.begin(), entries.size()))) {}

SubsetVertex SubsetVertex::from_entries(std::span<const Entry> entries) {
  std::uint64_t bits = 0;
  for (Entry e : entries) {
    if (e < 1 || e > kMaxGroundSet) {
      throw Error(ErrorKind::invalid_entry, "entry " + std::to_string(e));
    }
    const std::uint64_t bit = std::uint64_t{1} << (e - 1);
    if (bits & bit) {
      throw Error(ErrorKind::invalid_vertex,
                  "repeated entry " + std::to_string(e));
    }
    bits |= bit;
  }
  return SubsetVertex(bits);
}

std::vector<Entry> SubsetVertex::entries() const {
  std::vector<Entry> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b) + 1);
  }
  return out;
}

std::string SubsetVertex::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Entry e : entries()) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  os << '}';
  return os.str();
}

std::size_t intersection_size(SubsetVertex u, SubsetVertex v) noexcept {
  return static_cast<std::size_t>(std::popcount(u.bits() & v.bits()));
}

int hamming_distance(SubsetVertex u, SubsetVertex v) {
  if (u.size() != v.size()) {
    throw Error(ErrorKind::invalid_vertex,
                "cardinality mismatch " + u.to_string() + " vs " + v.to_string());
  }
  return u.size() - static_cast<int>(intersection_size(u, v));
}

bool is_adjacent(SubsetVertex u, SubsetVertex v, const GraphParams& params) {
  if (u.size() != params.k || v.size() != params.k) {
    throw Error(ErrorKind::invalid_vertex, "expected " +
                                               std::to_string(params.k) +
                                               "-subsets");
  }
  if (u == v) return false;
  return static_cast<int>(intersection_size(u, v)) == params.t;
}

SubsetVertex swap(SubsetVertex x, Entry remove, Entry add) {
  if (!x.contains(remove) || add < 1 || add > kMaxGroundSet || x.contains(add)) {
    throw Error(ErrorKind::invalid_swap, "cannot exchange " +
                                             std::to_string(remove) + " for " +
                                             std::to_string(add) + " in " +
                                             x.to_string());
  }
  return SubsetVertex(x.bits() ^ (std::uint64_t{1} << (remove - 1)) ^
                      (std::uint64_t{1} << (add - 1)));
}

SubsetVertex exchange(SubsetVertex x, std::span<const Entry> removed,
                      std::span<const Entry> added) {
  const SubsetVertex r = SubsetVertex::from_entries(removed);
  const SubsetVertex a = SubsetVertex::from_entries(added);
  if ((r.bits() & ~x.bits()) != 0 || r.size() != a.size()) {
    throw Error(ErrorKind::invalid_swap, "bad exchange on " + x.to_string());
  }
  const std::uint64_t kept = x.bits() & ~r.bits();
  if ((kept & a.bits()) != 0) {
    throw Error(ErrorKind::invalid_swap, "added entry already present in " +
                                             x.to_string());
  }
  return SubsetVertex(kept | a.bits());
}

SubsetVertex exchange(SubsetVertex x, std::initializer_list<Entry> removed,
                      std::initializer_list<Entry> added) {
  return exchange(x, std::span(removed.begin(), removed.size()),
                  std::span(added.begin(), added.size()));
}

SubsetVertex ground_set(int n) {
  if (n < 0 || n > kMaxGroundSet) {
    throw Error(ErrorKind::capacity, "ground set size " + std::to_string(n));
  }
  return SubsetVertex(n == 64 ? ~std::uint64_t{0}
                              : (std::uint64_t{1} << n) - 1);
}

}  // namespace usg
