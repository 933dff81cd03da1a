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

// Zeta polynomials of linear codes.
//
// For a q-ary [n, k, d] code the zeta polynomial P(T) is the unique
// polynomial of degree at most n - d with
//
//   P(T) (1-T)^d / (1-qT)  ==  a(T/(1-T))   (mod T^(n-d+1)),
//
// where a(t) is the normalized weight enumerator. The same P(T) also
// satisfies a bivariate coefficient identity against A(x,y); both routes
// are implemented and must agree. Z(T) = P(T)/((1-T)(1-qT)).

#ifndef CODEZETA_ZETA_HPP
#define CODEZETA_ZETA_HPP

#include "codezeta/code.hpp"
#include "codezeta/enumerator.hpp"
#include "codezeta/exactmath.hpp"

namespace codezeta {

struct ZetaPolynomial {
  UniPoly P;
  int q = 0;
  int n = 0;
  int k = 0;
  int d = 0;
  int d_dual = 0;
  /// n + 1 - k - d
  int g = 0;
  /// n + 1 - (n-k) - d_dual
  int g_dual = 0;
};

/// Solves the truncated-series congruence (triangular).
ZetaPolynomial zeta_from_normalized(const NormalizedEnumerator& a, int k, int d_dual);
ZetaPolynomial zeta_from_normalized(const WeightDistribution& a);

/// Solves [T^(n-d)] P(T)/((1-T)(1-qT)) (y+(x-y)T)^n = (A(x,y)-x^n)/(q-1)
/// coefficient-wise as an overdetermined linear system. Throws
/// Error(check_failed) if inconsistent or not uniquely solvable.
ZetaPolynomial zeta_from_enumerator_bivariate(const WeightDistribution& a);

/// Both routes; throws Error(check_failed) if they disagree.
ZetaPolynomial zeta_polynomial(const WeightDistribution& a);

/// P_dual(T) == P(1/(qT)) q^g T^(g+g_dual), expanded exactly.
bool check_functional_equation(const ZetaPolynomial& code, const ZetaPolynomial& dual);

struct DistanceBound {
  /// p_1 / p_0
  Rational a;
  Rational lhs;  // a_d (a - d + q)
  Rational rhs;  // a_{d+1}
  /// The T^1 coefficient lies inside the series truncation only for d < n.
  bool relation_defined = false;
  bool relation_holds = false;
  /// q + 1 + a
  Rational bound;
  bool bound_holds = false;  // d + 1 <= q + 1 + a
};

/// Throws Error(check_failed) when p_0 = 0.
DistanceBound distance_bound_from_zeta(const ZetaPolynomial& p, std::span<const Rational> a_list);

/// Rational function in (T, u): first exponent is T, second is u.
struct TwoVarZeta {
  RatFun value;
  int g = 0;
};

/// Z(T,u) from Z(T,u)(u-1)T^(1-g) = Wn+(uT, 1/T). Throws
/// Error(check_failed) if the substituted numerator is not divisible by
/// (u-1).
TwoVarZeta two_var_zeta(const RatFun& wn_plus, int n, int k, int g);

/// Z(T,q) == P(T)/((1-T)(1-qT)).
bool check_two_var_compat(const TwoVarZeta& z, const ZetaPolynomial& p);

/// Z(T,u) == Z(1/(uT),u) u^(g-1) T^(2g-2). Exploratory only.
bool check_two_var_functional_equation(const TwoVarZeta& z);

/// 1/((1-T)(1-qT)) with P in the numerator, as a RatFun in T.
RatFun one_var_zeta(const ZetaPolynomial& p);

}  // namespace codezeta

#endif  // CODEZETA_ZETA_HPP
