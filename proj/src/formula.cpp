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


#include "usg/formula.hpp"

#include "usg/error.hpp"

namespace usg {

namespace {

void check_range(int n, int k) {
  if (k < 1 || n < k) {
    throw Error(ErrorKind::invalid_params, "formula needs n >= k >= 1");
  }
}

}  // namespace

std::size_t kappa_formula(int n, int k) {
  check_range(n, k);
  return static_cast<std::size_t>(k) * static_cast<std::size_t>(n - k);
}

KappaPrimeFormula kappa_prime_formula(int n, int k) {
  check_range(n, k);
  KappaPrimeFormula f;
  const auto sz = [](long v) { return static_cast<std::size_t>(v); };
  if (k == 2 && n >= 6) {
    f.value = sz(3L * (n - 3));
  } else if (k >= 3 && n == k + 2) {
    f.value = sz(3L * (k - 1));
    if (k == 3) {
      f.ambiguous = true;
      f.note =
          "J(5,3) is isomorphic to J(5,2), which has no super vertex-cut; "
          "the n = k+2 line gives 6 here";
    }
  } else if (k >= 3 && n >= k + 3) {
    f.value = sz((2L * k - 1) * (n - k) - k);
  }
  return f;
}

std::optional<std::size_t> kneser_kappa_prime_reference(const GraphParams& p) {
  if (p.t != 0 || p.k != 2 || p.n < 5) return std::nullopt;
  return static_cast<std::size_t>(p.n) * static_cast<std::size_t>(p.n - 1) / 2 -
         6;
}

}  // namespace usg
