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

#include "codezeta/bounds.hpp"

#include <numeric>

#include "codezeta/error.hpp"

namespace codezeta {

namespace {

Rational a_at(const NormalizedEnumerator& a, int w) {
  if (w < 0 || w > a.n) return 0;
  return a.a_list[static_cast<std::size_t>(w)];
}

UniPoly interpolate_range(const NormalizedEnumerator& a, int lo, int hi, int step) {
  std::vector<Rational> xs;
  std::vector<Rational> ys;
  for (int w = lo; w <= hi; ++w) {
    xs.emplace_back(w);
    ys.push_back(alternating_difference(a, w, step));
  }
  return interpolate(xs, ys);
}

}  // namespace

Rational alternating_difference(const NormalizedEnumerator& a, int w, int step) {
  const Rational scale = rpow(Rational(a.q - 1), step);
  Rational v = a_at(a, w) - scale * a_at(a, w - step);
  if ((w - a.d) % 2 != 0) v = -v;
  return v;
}

GwPoly g_poly(const NormalizedEnumerator& a, int d_dual) {
  if (d_dual < 1) fail(ErrorKind::domain, "g_poly needs d_dual >= 1");
  const int n = a.n;
  const int degree = n - d_dual;
  GwPoly out{interpolate_range(a, 1, degree + 1, 1), a.q, n, a.d, d_dual};
  for (int w = degree + 2; w <= n; ++w) {
    if (out.g(Rational(w)) != alternating_difference(a, w, 1)) {
      fail(ErrorKind::check_failed, "g(w) fails to extrapolate at w = " + std::to_string(w));
    }
  }
  if (out.g.degree() != degree) {
    fail(ErrorKind::check_failed, "g(w) has degree " + std::to_string(out.g.degree()) + ", expected " +
                                      std::to_string(degree));
  }
  return out;
}

UniPoly shifted_binomial_poly(int m) {
  if (m < 0) return UniPoly{};
  UniPoly acc = UniPoly::constant(1);
  Integer factorial = 1;
  for (int i = 0; i < m; ++i) {
    acc *= UniPoly{Rational(-2 - i), Rational(1)};
    factorial *= i + 1;
  }
  return acc * (Rational(1) / Rational(factorial));
}

GwPoly g_from_zeta(const ZetaPolynomial& p) {
  UniPoly sum;
  for (int j = 0; j <= p.P.degree(); ++j) {
    Rational c = p.P.coeff(j);
    if (j % 2) c = -c;
    sum += shifted_binomial_poly(p.d + j - 2) * c;
  }
  return GwPoly{sum * Rational(p.q - 1), p.q, p.n, p.d, p.d_dual};
}

UniPoly tight_case_g(int q, int d) { return shifted_binomial_poly(d - 2) * Rational(q - 1); }

bool binary_even_with_all_one(const WeightDistribution& a) {
  if (a.q != 2 || a.counts[static_cast<std::size_t>(a.n)] != 1) return false;
  for (int i = 1; i <= a.n; i += 2) {
    if (a.counts[static_cast<std::size_t>(i)] != 0) return false;
  }
  return true;
}

UniPoly h_poly(const NormalizedEnumerator& a, int c, int d_dual) {
  if (c < 1) fail(ErrorKind::domain, "h_poly needs c >= 1");
  const UniPoly h = interpolate_range(a, c, a.n, c);
  int bound = a.n - d_dual;
  // Binary, even, all-one word present: a_n = A_n = 1.
  bool all_even = a.q == 2 && a_at(a, a.n) == 1;
  for (int w = 1; all_even && w <= a.n; w += 2) all_even = a_at(a, w) == 0;
  if (all_even) bound -= 1;
  if (h.degree() > bound) {
    fail(ErrorKind::check_failed, "h(w) has degree " + std::to_string(h.degree()) + " above the bound " +
                                      std::to_string(bound));
  }
  return h;
}

UniPoly h_from_g(const GwPoly& g, int c) {
  UniPoly h;
  const Rational base = Rational(1 - g.q);
  for (int j = 0; j < c; ++j) {
    h += g.g.compose(UniPoly{Rational(-j), Rational(1)}) * rpow(base, j);
  }
  return h;
}

int divisibility(const WeightDistribution& a) {
  int c = 0;
  for (int i = 1; i <= a.n; ++i) {
    if (a.counts[static_cast<std::size_t>(i)] != 0) c = std::gcd(c, i);
  }
  if (c == 0) fail(ErrorKind::domain, "divisibility needs a nonzero codeword");
  return c;
}

ZeroAudit zero_count_audit(const UniPoly& poly, int lo, int hi, const Rational& lower_bound) {
  ZeroAudit out;
  out.lower_bound = lower_bound;
  for (int w = lo; w <= hi; ++w) {
    if (poly(Rational(w)) == 0) out.zeros.push_back(w);
  }
  out.meets = Rational(static_cast<long>(out.zeros.size())) >= lower_bound;
  return out;
}

bool check_subcode_average(const NormalizedEnumerator& a, int d_dual) {
  const auto avg = [&](int s) {
    Rational acc = 0;
    for (int w = 0; w <= std::min(s, a.n); ++w) acc += a_at(a, w) * Rational(binomial(s, w));
    return acc;
  };
  for (int s = std::max(0, a.n - d_dual + 1); s < a.n; ++s) {
    if (avg(s + 1) != Rational(a.q) * avg(s)) return false;
  }
  return true;
}

std::optional<SelfDualType> mallows_sloane(int q, int c, int n) {
  if (q == 2 && c % 4 == 0) return SelfDualType{"II", 4, 4 * (n / 24) + 4, 0, false, false};
  if (q == 2 && c % 2 == 0) return SelfDualType{"I", 2, 2 * (n / 8) + 2, 0, false, false};
  if (q == 3 && c % 3 == 0) return SelfDualType{"III", 3, 3 * (n / 12) + 3, 0, false, false};
  if (q == 4 && c % 2 == 0) return SelfDualType{"IV", 2, 2 * (n / 6) + 2, 0, false, false};
  return std::nullopt;
}

bool BoundsReport::passes() const noexcept {
  if (!singleton.holds() || !distance_pair.holds()) return false;
  if (self_dual_type && !self_dual_type->formal && self_dual_type->d > self_dual_type->bound) return false;
  if (h_identically_zero) return true;
  if (!divisible.holds() || !h_zeros.meets) return false;
  if (binary_even_all_one && !binary_even_all_one->holds()) return false;
  if (h_zeros_binary && !h_zeros_binary->meets) return false;
  return true;
}

BoundsReport check_bounds(const WeightDistribution& a, const WeightDistribution& a_dual, bool self_dual) {
  BoundsReport r;
  const long n = a.n;
  const long d = a.d;
  const long dd = a_dual.d;
  r.singleton = {d, n - a.k + 1};
  r.distance_pair = {d - 2, n - dd};
  r.c = divisibility(a);
  const long c = r.c;
  r.divisible = {d + c * dd, n + c * (c + 1)};
  const bool binary_case = binary_even_with_all_one(a) && c % 2 == 0;
  if (binary_case) r.binary_even_all_one = Inequality{2 * d + c * dd, n + c * (c + 2)};
  const bool formal = !self_dual && 2 * a.k == a.n && a.counts == a_dual.counts;
  if (self_dual || formal) {
    r.self_dual_type = mallows_sloane(a.q, r.c, a.n);
    if (r.self_dual_type) {
      r.self_dual_type->d = a.d;
      r.self_dual_type->formal = formal;
      r.self_dual_type->met = a.d == r.self_dual_type->bound;
    }
  }
  const NormalizedEnumerator norm = normalize(a);
  const UniPoly h = h_poly(norm, r.c, static_cast<int>(dd));
  r.h_identically_zero = h.is_zero();
  const Rational base = fraction(c - 1, c) * Rational(n - c);
  r.h_zeros = zero_count_audit(h, r.c, a.n, base + fraction(d - 2 * c, c));
  if (binary_case) r.h_zeros_binary = zero_count_audit(h, r.c, a.n, base + fraction(2 * (d - 2 * c), c));
  return r;
}

}  // namespace codezeta
