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

#include <cstddef>
#include <optional>
#include <string>

#include "usg/subset.hpp"

namespace usg {

/// κ(J(n,k)) = k(n−k). J(k,k) is a single vertex and reports 0.
std::size_t kappa_formula(int n, int k);

struct KappaPrimeFormula {
  std::optional<std::size_t> value;  // empty means +∞
  // True at (n,k) = (5,3): the n = k+2 line gives 6, yet J(5,3) ≅ J(5,2)
  // has no super vertex-cut.
  bool ambiguous = false;
  std::string note;

  bool infinite() const { return !value.has_value(); }
};

/// Piecewise κ′(J(n,k)) for n >= k >= 1.
KappaPrimeFormula kappa_prime_formula(int n, int k);

/// Reference κ′ of the Kneser graph G(n,2,0) for n >= 5: C(n,2) − 6.
std::optional<std::size_t> kneser_kappa_prime_reference(const GraphParams& p);

}  // namespace usg
