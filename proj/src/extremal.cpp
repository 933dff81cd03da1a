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

#include "codezeta/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include <Eigen/Eigenvalues>

#include "codezeta/bounds.hpp"
#include "codezeta/enumerator.hpp"
#include "codezeta/error.hpp"

namespace codezeta {

namespace {

void check_type(int q, int c, int n) {
  const bool known = (q == 2 && (c == 2 || c == 4)) || (q == 3 && c == 3) || (q == 4 && c == 2);
  if (!known) {
    fail(ErrorKind::domain, "no self-dual type with q = " + std::to_string(q) + ", c = " + std::to_string(c));
  }
  int modulus = 2;
  if (q == 2 && c == 4) modulus = 8;
  if (q == 3) modulus = 4;
  if (n < 1 || n % modulus != 0) {
    fail(ErrorKind::domain, "length " + std::to_string(n) + " must be a positive multiple of " +
                                std::to_string(modulus) + " for this type");
  }
}

std::vector<int> support(int c, int n, int d) {
  std::vector<int> s{0};
  for (int i = std::max(d, 1); i <= n; ++i) {
    if (i % c == 0) s.push_back(i);
  }
  return s;
}

}  // namespace

LinearSolution extremal_system(int q, int c, int n, int d) {
  const std::vector<int> cols = support(c, n, d);
  const Rational scale(ipow(Integer(q), static_cast<unsigned long>(n / 2)));
  // Row 0 pins A_0 = 1; row j + 1 is sum_i K_j(i) A_i - q^(n/2) A_j = 0.
  RationalMatrix m(static_cast<std::size_t>(n) + 2, std::vector<Rational>(cols.size()));
  std::vector<Rational> rhs(static_cast<std::size_t>(n) + 2);
  m[0][0] = 1;
  rhs[0] = 1;
  for (int j = 0; j <= n; ++j) {
    auto& row = m[static_cast<std::size_t>(j) + 1];
    for (std::size_t t = 0; t < cols.size(); ++t) {
      row[t] = Rational(krawtchouk(q, n, j, cols[t]));
      if (cols[t] == j) row[t] -= scale;
    }
  }
  return solve_linear(std::move(m), std::move(rhs));
}

WeightDistribution ExtremalEnumerator::distribution() const {
  WeightDistribution w;
  w.q = q;
  w.n = n;
  w.k = n / 2;
  for (const Rational& a : A) {
    if (a.get_den() != 1) fail(ErrorKind::invalid_distribution, "entry " + to_string(a) + " is not an integer");
    w.counts.push_back(a.get_num());
  }
  w.d = minimum_distance(w.counts);
  w.d_dual = w.d;
  return w;
}

ExtremalEnumerator extremal_sd_enumerator(int q, int c, int n) {
  check_type(q, c, n);
  const auto type = mallows_sloane(q, c, n);
  const int bound = type->bound;
  for (int d = std::min(bound, n); d >= 1; --d) {
    const LinearSolution sol = extremal_system(q, c, n, d);
    if (!sol.consistent) continue;
    ExtremalEnumerator e;
    e.q = q;
    e.c = c;
    e.n = n;
    e.bound = bound;
    e.A.assign(static_cast<std::size_t>(n) + 1, Rational(0));
    const std::vector<int> cols = support(c, n, d);
    for (std::size_t t = 0; t < cols.size(); ++t) e.A[static_cast<std::size_t>(cols[t])] = sol.values[t];
    e.d = n + 1;
    for (int i = 1; i <= n; ++i) {
      if (e.A[static_cast<std::size_t>(i)] != 0) {
        e.d = i;
        break;
      }
    }
    e.unique = sol.unique();
    e.solution_dimension = static_cast<int>(sol.free_columns.size());
    e.nonnegative = std::all_of(e.A.begin(), e.A.end(), [](const Rational& a) { return a >= 0; });
    return e;
  }
  fail(ErrorKind::check_failed, "no self-invariant enumerator exists for q = " + std::to_string(q) +
                                    ", c = " + std::to_string(c) + ", n = " + std::to_string(n));
}

GegenbauerPoly gegenbauer(int m, const Rational& lambda) {
  if (m < 0) fail(ErrorKind::domain, "gegenbauer needs m >= 0");
  const UniPoly x{Rational(0), Rational(1)};
  UniPoly prev = UniPoly::constant(1);
  UniPoly cur = x * (2 * lambda);
  if (m == 0) return {0, lambda, prev};
  for (int i = 2; i <= m; ++i) {
    UniPoly next = (x * (2 * (Rational(i - 1) + lambda)) * cur - prev * (Rational(i - 2) + 2 * lambda)) *
                   (Rational(1) / Rational(i));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return {m, lambda, cur};
}

UltrasphericalCheck check_ultraspherical(const ZetaPolynomial& p, int m) {
  if (m < 1 || m % 2 == 0) fail(ErrorKind::domain, "check_ultraspherical needs odd m >= 1");
  if (p.P.degree() != m - 1) {
    fail(ErrorKind::domain, "zeta polynomial has degree " + std::to_string(p.P.degree()) + ", expected " +
                                std::to_string(m - 1));
  }
  UltrasphericalCheck out;
  const UniPoly q_poly = p.P * UniPoly{Rational(1), Rational(2)};
  out.lhs = q_poly.compose(UniPoly{Rational(0), Rational(0), Rational(1, 2)});

  // C(x) with x = (T^-1 + T)/2, times T^m: sum_j c_j ((1 + T^2)/2)^j T^(m-j).
  const GegenbauerPoly c = gegenbauer(m, Rational(m + 1));
  const UniPoly half_sum{Rational(1, 2), Rational(0), Rational(1, 2)};
  for (int j = 0; j <= m; ++j) {
    const Rational cj = c.poly.coeff(j);
    if (cj == 0) continue;
    out.rhs += half_sum.pow(static_cast<unsigned>(j)) * UniPoly::monomial(cj, m - j);
  }
  if (out.rhs.is_zero() || out.lhs.degree() != out.rhs.degree()) return out;
  out.lambda_m = out.lhs.coeff(out.lhs.degree()) / out.rhs.coeff(out.rhs.degree());
  out.holds = out.lhs == out.rhs * out.lambda_m;
  return out;
}

std::vector<double> critical_circle_radii(const ZetaPolynomial& p) {
  const int deg = p.P.degree();
  if (deg < 1) fail(ErrorKind::domain, "critical_circle_radii needs deg P >= 1");
  std::vector<double> c(static_cast<std::size_t>(deg) + 1);
  for (int i = 0; i <= deg; ++i) c[static_cast<std::size_t>(i)] = p.P.coeff(i).get_d();

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -c[static_cast<std::size_t>(i)] / c.back();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() != Eigen::Success) {
    fail(ErrorKind::numerical, "eigen solver did not converge for P = " + p.P.to_string());
  }

  using Complex = std::complex<double>;
  std::vector<double> radii;
  for (int r = 0; r < deg; ++r) {
    Complex z = solver.eigenvalues()[r];
    for (int iter = 0; iter < 8; ++iter) {
      Complex f = 0;
      Complex df = 0;
      for (int i = deg; i >= 0; --i) {
        df = df * z + f;
        f = f * z + c[static_cast<std::size_t>(i)];
      }
      if (std::abs(df) == 0.0) break;
      const Complex step = f / df;
      z -= step;
      if (std::abs(step) < 1e-17) break;
    }
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      fail(ErrorKind::numerical, "root refinement diverged for P = " + p.P.to_string());
    }
    radii.push_back(std::abs(z));
  }
  std::sort(radii.begin(), radii.end());
  return radii;
}

int sign_changes_on_grid(const UniPoly& p, int steps) {
  int changes = 0;
  int last = 0;
  for (int i = 0; i <= steps; ++i) {
    const Rational v = p(fraction(2 * i - steps, steps));
    const int s = sgn(v);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace codezeta
