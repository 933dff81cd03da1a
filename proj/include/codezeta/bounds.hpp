// Copyright 2026 The codezeta Authors.
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

// Divisibility bounds from the interpolation polynomial
//
//   g(w) = (a_w - (q-1) a_{w-1}) (-1)^(w-d),   w = 1..n,
//
// which has degree exactly n - d_dual and zeros at 2..d-1, and its
// c-step analogue h(w) for codes whose weights are all divisible by c.

#ifndef CODEZETA_BOUNDS_HPP
#define CODEZETA_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "codezeta/code.hpp"
#include "codezeta/enumerator.hpp"
#include "codezeta/exactmath.hpp"
#include "codezeta/zeta.hpp"

namespace codezeta {

struct GwPoly {
  UniPoly g;  // in the variable w
  int q = 0;
  int n = 0;
  int d = 0;
  int d_dual = 0;
};

/// The prescribed value (a_w - (q-1)^step a_{w-step}) (-1)^(w-d).
Rational alternating_difference(const NormalizedEnumerator& a, int w, int step);

/// Interpolates w = 1..n-d_dual+1, then audits w up to n and the exact
/// degree; throws Error(check_failed) on any mismatch.
GwPoly g_poly(const NormalizedEnumerator& a, int d_dual);

/// C(w - 2, m) as a polynomial in w (zero for m < 0).
UniPoly shifted_binomial_poly(int m);

/// (q-1) sum_j (-1)^j p_j C(w-2, d+j-2).
GwPoly g_from_zeta(const ZetaPolynomial& p);

/// (q-1) C(w-2, d-2): the form g takes when d - 2 = n - d_dual.
UniPoly tight_case_g(int q, int d);

/// Interpolates (a_w - (q-1)^c a_{w-c})(-1)^(w-d) on w = c..n and checks
/// the degree bound n - d_dual, lowered by one for binary even codes
/// containing the all-one word. Throws Error(check_failed) if exceeded.
UniPoly h_poly(const NormalizedEnumerator& a, int c, int d_dual);

/// sum_{j<c} (-(q-1))^j g(w - j): the same h built from g.
UniPoly h_from_g(const GwPoly& g, int c);

bool binary_even_with_all_one(const WeightDistribution& a);

/// gcd of the nonzero weights.
int divisibility(const WeightDistribution& a);

struct ZeroAudit {
  std::vector<int> zeros;  // integer zeros in [lo, hi]
  Rational lower_bound;
  bool meets = false;
};

ZeroAudit zero_count_audit(const UniPoly& poly, int lo, int hi, const Rational& lower_bound);

/// For every s in (n - d_dual, n): sum_w a_w C(s+1, w) == q sum_w a_w C(s, w).
bool check_subcode_average(const NormalizedEnumerator& a, int d_dual);

struct Inequality {
  long lhs = 0;
  long rhs = 0;
  bool holds() const noexcept { return lhs <= rhs; }
};

struct SelfDualType {
  std::string name;  // "I", "II", "III", "IV"
  int c = 0;
  int bound = 0;
  int d = 0;
  bool met = false;
  /// Applied on equal distributions only; reported, never failing.
  bool formal = false;
};

struct BoundsReport {
  Inequality singleton;         // d <= n - k + 1
  Inequality distance_pair;     // d - 2 <= n - d_dual
  int c = 1;
  /// h == 0 leaves nothing to count zeros of; the h-derived inequalities
  /// and audits are then not applicable.
  bool h_identically_zero = false;
  Inequality divisible;         // d + c d_dual <= n + c(c+1)
  std::optional<Inequality> binary_even_all_one;  // 2d + c d_dual <= n + c(c+2)
  std::optional<SelfDualType> self_dual_type;
  /// Zeros of h on [c, n] against (c-1)/c (n-c) + (d-2c)/c.
  ZeroAudit h_zeros;
  /// Binary even all-one case: against (c-1)/c (n-c) + 2(d-2c)/c.
  std::optional<ZeroAudit> h_zeros_binary;

  bool passes() const noexcept;
};

/// `self_dual` selects the Mallows-Sloane line; the distributions alone
/// cannot distinguish self-dual from formally self-dual. Equal
/// distributions without `self_dual` get the line as a formal report.
BoundsReport check_bounds(const WeightDistribution& a, const WeightDistribution& a_dual, bool self_dual);

/// Mallows-Sloane bound for a self-dual type; nullopt if (q, c) fits none.
std::optional<SelfDualType> mallows_sloane(int q, int c, int n);

}  // namespace codezeta

#endif  // CODEZETA_BOUNDS_HPP
