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

// Exact arithmetic substrate: big rationals, dense univariate polynomials,
// sparse bivariate (Laurent) polynomials, truncated power series and
// rational-function pairs compared by cross-multiplication.

#ifndef CODEZETA_EXACTMATH_HPP
#define CODEZETA_EXACTMATH_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace codezeta {

using Integer = mpz_class;
using Rational = mpq_class;

/// "num/den" with a positive denominator; integers render as "n/1".
std::string to_string(const Rational& r);
/// Decimal digits.
std::string to_string(const Integer& z);
/// Parses "num/den" or "num"; throws Error(parse) on malformed input.
Rational parse_rational(const std::string& text);

/// num/den in lowest terms; throws Error(division_by_zero) for den == 0.
Rational fraction(const Integer& num, const Integer& den);

/// Generalized binomial a(a-1)...(a-k+1)/k!; any integer a, k >= 0.
Integer binomial(long a, long k);

Integer ipow(const Integer& base, unsigned long exponent);
Rational rpow(const Rational& base, long exponent);

// ---------------------------------------------------------------------------

class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coefficients);
  UniPoly(std::initializer_list<Rational> coefficients);

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, int degree);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Zero for indices beyond the degree.
  Rational coeff(int i) const;
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  Rational operator()(const Rational& x) const;
  UniPoly pow(unsigned exponent) const;
  /// p(x) -> p(inner(x)).
  UniPoly compose(const UniPoly& inner) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  friend UniPoly operator-(UniPoly a) { return a *= Rational(-1); }
  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string to_string(const std::string& var = "T") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// ---------------------------------------------------------------------------

/// A power series known modulo T^(order+1).
class TruncatedSeries {
 public:
  TruncatedSeries(int order, std::vector<Rational> coefficients);
  TruncatedSeries(int order, const UniPoly& p);

  int order() const noexcept { return order_; }
  Rational coeff(int i) const;
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  TruncatedSeries truncate(int order) const;
  /// Requires a nonzero constant term.
  TruncatedSeries inverse() const;
  UniPoly to_poly() const;

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

 private:
  int order_;
  std::vector<Rational> coeffs_;
};

/// num/den modulo T^(order+1). Throws division_by_zero when den(0) = 0.
TruncatedSeries series_quotient(const UniPoly& num, const UniPoly& den, int order);

/// a(T/(1-T)) modulo T^(order+1).
TruncatedSeries mobius_compose(const UniPoly& a, int order);

/// Compare two series on their common truncation min(order_a, order_b).
bool agree_to_common_order(const TruncatedSeries& a, const TruncatedSeries& b);

// ---------------------------------------------------------------------------

/// Sparse polynomial in two variables. Negative exponents are allowed so
/// that Laurent intermediates can be represented; is_polynomial() tells.
class BiPoly {
 public:
  using Exponent = std::pair<int, int>;
  using Terms = std::map<Exponent, Rational>;

  BiPoly() = default;
  static BiPoly constant(const Rational& c);
  static BiPoly monomial(const Rational& c, int i, int j);
  static BiPoly from_first(const UniPoly& p);
  static BiPoly from_second(const UniPoly& p);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_polynomial() const noexcept;
  Rational coeff(int i, int j) const;
  void add_term(const Rational& c, int i, int j);

  int min_first() const;
  int min_second() const;
  int max_first() const;
  int max_second() const;

  BiPoly pow(unsigned exponent) const;
  /// Multiplies by the monomial x^di y^dj.
  BiPoly shift(int di, int dj) const;
  /// Sets the second variable to c; result has second exponent 0.
  BiPoly substitute_second(const Rational& c) const;
  Rational operator()(const Rational& x, const Rational& y) const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const BiPoly& o);
  BiPoly& operator*=(const Rational& c);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(BiPoly a, const BiPoly& b) { return a *= b; }
  friend BiPoly operator*(BiPoly a, const Rational& c) { return a *= c; }
  friend BiPoly operator*(const Rational& c, BiPoly a) { return a *= c; }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

  /// Terms ordered by total degree descending, then first exponent descending.
  std::string to_string(const std::string& x = "x", const std::string& y = "y") const;

 private:
  Terms terms_;
};

/// Exact quotient p / (y - c) treating p as a polynomial in the second
/// variable; nullopt when the remainder is nonzero or p has negative
/// second exponents.
std::optional<BiPoly> divide_by_second_minus(const BiPoly& p, const Rational& c);

// ---------------------------------------------------------------------------

struct RatFun {
  BiPoly numerator;
  BiPoly denominator;
};

/// f.num * g.den == g.num * f.den.
bool ratfun_equal(const RatFun& f, const RatFun& g);

// ---------------------------------------------------------------------------

using RationalMatrix = std::vector<std::vector<Rational>>;

struct LinearSolution {
  bool consistent = false;
  int rank = 0;
  /// Particular solution with free variables set to zero.
  std::vector<Rational> values;
  std::vector<int> free_columns;

  bool unique() const noexcept { return consistent && free_columns.empty(); }
};

/// Gauss-Jordan elimination over the rationals.
LinearSolution solve_linear(RationalMatrix matrix, std::vector<Rational> rhs);

/// Newton interpolation through (xs[i], ys[i]); xs pairwise distinct.
UniPoly interpolate(std::span<const Rational> xs, std::span<const Rational> ys);

}  // namespace codezeta

#endif  // CODEZETA_EXACTMATH_HPP
