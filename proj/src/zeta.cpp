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

#include "codezeta/zeta.hpp"

#include "codezeta/error.hpp"

namespace codezeta {

namespace {

ZetaPolynomial with_metadata(UniPoly p, int q, int n, int k, int d, int d_dual) {
  ZetaPolynomial z;
  z.P = std::move(p);
  z.q = q;
  z.n = n;
  z.k = k;
  z.d = d;
  z.d_dual = d_dual;
  z.g = n + 1 - k - d;
  z.g_dual = k + 1 - d_dual;
  return z;
}

}  // namespace

ZetaPolynomial zeta_from_normalized(const NormalizedEnumerator& a, int k, int d_dual) {
  if (a.d < 1 || a.d > a.n) fail(ErrorKind::domain, "zeta polynomial needs 1 <= d <= n");
  const int order = a.n - a.d;
  const TruncatedSeries target = mobius_compose(a.a_poly, order);
  const TruncatedSeries one_minus_qt(order, UniPoly{Rational(1), Rational(-a.q)});
  const UniPoly one_minus_t{Rational(1), Rational(-1)};
  const TruncatedSeries p =
      series_quotient((target * one_minus_qt).to_poly(), one_minus_t.pow(static_cast<unsigned>(a.d)), order);
  return with_metadata(p.to_poly(), a.q, a.n, k, a.d, d_dual);
}

ZetaPolynomial zeta_from_normalized(const WeightDistribution& a) {
  return zeta_from_normalized(normalize(a), a.k, a.d_dual);
}

ZetaPolynomial zeta_from_enumerator_bivariate(const WeightDistribution& a) {
  const int n = a.n;
  const int q = a.q;
  const int d = a.d;
  if (d < 1 || d > n) fail(ErrorKind::domain, "zeta polynomial needs 1 <= d <= n");
  const int order = n - d;

  // 1/((1-T)(1-qT)) = sum_j (q^(j+1)-1)/(q-1) T^j
  std::vector<Rational> h(static_cast<std::size_t>(order) + 1);
  for (int j = 0; j <= order; ++j) {
    h[static_cast<std::size_t>(j)] = fraction(ipow(Integer(q), static_cast<unsigned long>(j + 1)) - 1, q - 1);
  }
  // [T^m] (y + (x-y)T)^n = C(n,m) (x-y)^m y^(n-m)
  const BiPoly x_minus_y = BiPoly::monomial(1, 1, 0) - BiPoly::monomial(1, 0, 1);
  std::vector<BiPoly> layer(static_cast<std::size_t>(order) + 1);
  for (int m = 0; m <= order; ++m) {
    layer[static_cast<std::size_t>(m)] =
        (x_minus_y.pow(static_cast<unsigned>(m)) * Rational(binomial(n, m))).shift(0, n - m);
  }

  // Row i <-> monomial x^(n-i) y^i; column l <-> p_l.
  RationalMatrix m(static_cast<std::size_t>(n) + 1, std::vector<Rational>(static_cast<std::size_t>(order) + 1));
  for (int l = 0; l <= order; ++l) {
    BiPoly col;
    for (int mm = 0; mm <= order - l; ++mm) {
      col += layer[static_cast<std::size_t>(mm)] * h[static_cast<std::size_t>(order - l - mm)];
    }
    for (int i = 0; i <= n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)] = col.coeff(n - i, i);
  }
  std::vector<Rational> rhs(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) rhs[static_cast<std::size_t>(i)] = Rational(a.counts[static_cast<std::size_t>(i)]) / (q - 1);

  const LinearSolution sol = solve_linear(std::move(m), std::move(rhs));
  if (!sol.consistent) fail(ErrorKind::check_failed, "bivariate zeta system is inconsistent");
  if (!sol.unique()) fail(ErrorKind::check_failed, "bivariate zeta system is not uniquely solvable");
  return with_metadata(UniPoly(sol.values), q, n, a.k, d, a.d_dual);
}

ZetaPolynomial zeta_polynomial(const WeightDistribution& a) {
  ZetaPolynomial series_route = zeta_from_normalized(a);
  const ZetaPolynomial bivariate_route = zeta_from_enumerator_bivariate(a);
  if (!(series_route.P == bivariate_route.P)) {
    fail(ErrorKind::check_failed, "zeta polynomial routes disagree: " + series_route.P.to_string() + " vs " +
                                      bivariate_route.P.to_string());
  }
  return series_route;
}

bool check_functional_equation(const ZetaPolynomial& code, const ZetaPolynomial& dual) {
  const int shift = code.g + code.g_dual;
  if (code.P.degree() > shift) return false;
  // p_j q^(g-j) T^(g+g_dual-j)
  std::vector<Rational> out(static_cast<std::size_t>(std::max(shift, 0)) + 1);
  for (int j = 0; j <= code.P.degree(); ++j) {
    out[static_cast<std::size_t>(shift - j)] = code.P.coeff(j) * rpow(Rational(code.q), code.g - j);
  }
  return UniPoly(std::move(out)) == dual.P;
}

DistanceBound distance_bound_from_zeta(const ZetaPolynomial& p, std::span<const Rational> a_list) {
  const Rational p0 = p.P.coeff(0);
  if (p0 == 0) fail(ErrorKind::check_failed, "zeta polynomial has zero constant term");
  const auto at = [&](int w) -> Rational {
    if (w < 0 || w >= static_cast<int>(a_list.size())) return 0;
    return a_list[static_cast<std::size_t>(w)];
  };
  DistanceBound b;
  b.a = p.P.coeff(1) / p0;
  b.lhs = at(p.d) * (b.a - p.d + p.q);
  b.rhs = at(p.d + 1);
  b.relation_defined = p.d < p.n;
  b.relation_holds = b.relation_defined && b.lhs == b.rhs;
  b.bound = b.a + p.q + 1;
  b.bound_holds = Rational(p.d + 1) <= b.bound;
  return b;
}

TwoVarZeta two_var_zeta(const RatFun& wn_plus, int n, int k, int g) {
  // x^i y^j -> (uT)^i T^(-j) = T^(i-j) u^i
  const auto substitute = [](const BiPoly& p) {
    BiPoly out;
    for (const auto& [e, c] : p.terms()) out.add_term(c, e.first - e.second, e.first);
    return out;
  };
  const int clear = n - k + 1;
  BiPoly num = substitute(wn_plus.numerator).shift(clear, 0);
  BiPoly den = substitute(wn_plus.denominator).shift(clear, 0);
  if (!num.is_polynomial() || !den.is_polynomial()) {
    fail(ErrorKind::check_failed, "negative powers of T remain after clearing");
  }
  auto reduced = divide_by_second_minus(num, 1);
  if (!reduced) fail(ErrorKind::check_failed, "two-variable numerator is not divisible by (u - 1)");
  num = std::move(*reduced);
  if (1 - g >= 0) {
    den = den.shift(1 - g, 0);
  } else {
    num = num.shift(g - 1, 0);
  }
  // Cancel the common power of T.
  const int common = std::min(num.is_zero() ? den.min_first() : num.min_first(), den.min_first());
  if (common > 0) {
    num = num.shift(-common, 0);
    den = den.shift(-common, 0);
  }
  // Normalize so the denominator's constant term is positive where present.
  const Rational d0 = den.coeff(0, 0);
  if (d0 < 0) {
    num *= Rational(-1);
    den *= Rational(-1);
  }
  return TwoVarZeta{{std::move(num), std::move(den)}, g};
}

RatFun one_var_zeta(const ZetaPolynomial& p) {
  const UniPoly den = UniPoly{Rational(1), Rational(-1)} * UniPoly{Rational(1), Rational(-p.q)};
  return RatFun{BiPoly::from_first(p.P), BiPoly::from_first(den)};
}

bool check_two_var_compat(const TwoVarZeta& z, const ZetaPolynomial& p) {
  const RatFun at_q{z.value.numerator.substitute_second(p.q), z.value.denominator.substitute_second(p.q)};
  if (at_q.denominator.is_zero()) return false;
  return ratfun_equal(at_q, one_var_zeta(p));
}

bool check_two_var_functional_equation(const TwoVarZeta& z) {
  // T^i u^j -> (uT)^(-i) u^j = T^(-i) u^(j-i)
  const auto reflect = [](const BiPoly& p) {
    BiPoly out;
    for (const auto& [e, c] : p.terms()) out.add_term(c, -e.first, e.second - e.first);
    return out;
  };
  const int g = z.g;
  const RatFun reflected{reflect(z.value.numerator).shift(2 * g - 2, g - 1), reflect(z.value.denominator)};
  return ratfun_equal(z.value, reflected);
}

}  // namespace codezeta
