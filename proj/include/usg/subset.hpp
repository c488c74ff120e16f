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

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "usg/error.hpp"

namespace usg {

// Ground-set entries are 1-based throughout.
using Entry = int;
using Rank = std::uint32_t;

inline constexpr int kMaxGroundSet = 64;

// Exact binomial coefficient; throws capacity on overflow of 64 bits.
std::uint64_t binomial(int n, int k);

struct GraphParams {
  int n = 0;
  int k = 0;
  int t = 0;

  bool johnson() const noexcept { return t == k - 1; }
  // Throws invalid_params or capacity.
  void validate() const;

  friend bool operator==(const GraphParams&, const GraphParams&) = default;
};

inline GraphParams johnson(int n, int k) { return {n, k, k - 1}; }
inline GraphParams kneser(int n, int k) { return {n, k, 0}; }

/// A subset of [n] stored as a bit set: bit (e-1) is set iff entry e is a
/// member. Ordering is lexicographic on the sorted member sequence, which
/// for equal-size sets reduces to "whoever owns the smallest element of
/// the symmetric difference comes first".
class SubsetVertex {
 public:
  constexpr SubsetVertex() = default;
  constexpr explicit SubsetVertex(std::uint64_t bits) : bits_(bits) {}
  SubsetVertex(std::initializer_list<Entry> entries);
  static SubsetVertex from_entries(std::span<const Entry> entries);

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  bool contains(Entry e) const noexcept {
    return e >= 1 && e <= kMaxGroundSet && ((bits_ >> (e - 1)) & 1U) != 0;
  }
  // Largest member, 0 for the empty set.
  int max_entry() const noexcept { return 64 - std::countl_zero(bits_); }
  std::vector<Entry> entries() const;
  std::string to_string() const;

  friend constexpr bool operator==(SubsetVertex, SubsetVertex) = default;
  friend bool operator<(SubsetVertex a, SubsetVertex b) noexcept {
    const std::uint64_t diff = a.bits_ ^ b.bits_;
    if (diff == 0) return false;
    if (std::popcount(a.bits_) != std::popcount(b.bits_)) {
      return std::popcount(a.bits_) < std::popcount(b.bits_);
    }
    return (a.bits_ & (diff & (~diff + 1))) != 0;
  }

 private:
  std::uint64_t bits_ = 0;
};

std::size_t intersection_size(SubsetVertex u, SubsetVertex v) noexcept;

/// k - |u ∩ v|. Throws invalid_vertex when |u| != |v|.
int hamming_distance(SubsetVertex u, SubsetVertex v);

/// True iff |u ∩ v| = params.t. Throws invalid_vertex on a cardinality
/// mismatch with params.k.
bool is_adjacent(SubsetVertex u, SubsetVertex v, const GraphParams& params);

/// Removes `remove` and introduces `add`. Throws invalid_swap unless
/// remove ∈ x and add ∉ x.
SubsetVertex swap(SubsetVertex x, Entry remove, Entry add);

/// Multi-entry exchange (x \ removed) ∪ added with set semantics, so an
/// entry that is both removed and re-added cancels out. Requires
/// removed ⊆ x, no repeated entries, and added disjoint from x \ removed.
SubsetVertex exchange(SubsetVertex x, std::span<const Entry> removed,
                      std::span<const Entry> added);
SubsetVertex exchange(SubsetVertex x, std::initializer_list<Entry> removed,
                      std::initializer_list<Entry> added);

/// The full set {1..n}.
SubsetVertex ground_set(int n);

}  // namespace usg
