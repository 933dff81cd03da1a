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

#include "codezeta/exactmath.hpp"

#include <algorithm>
#include <cassert>
#include <climits>
#include <sstream>

#include "codezeta/error.hpp"

namespace codezeta {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::parse: return "parse";
    case ErrorKind::validation: return "validation";
    case ErrorKind::capacity: return "capacity";
    case ErrorKind::unsupported_field: return "unsupported_field";
    case ErrorKind::division_by_zero: return "division_by_zero";
    case ErrorKind::invalid_distribution: return "invalid_distribution";
    case ErrorKind::check_failed: return "check_failed";
    case ErrorKind::numerical: return "numerical";
    case ErrorKind::domain: return "domain";
  }
  return "unknown";
}

std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0 || r.get_den() == 0) {
    fail(ErrorKind::parse, "malformed rational '" + text + "'");
  }
  r.canonicalize();
  return r;
}

Rational fraction(const Integer& num, const Integer& den) {
  if (den == 0) fail(ErrorKind::division_by_zero, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer binomial(long a, long k) {
  assert(k >= 0);
  Integer num = 1;
  Integer den = 1;
  for (long i = 0; i < k; ++i) {
    num *= (a - i);
    den *= (i + 1);
  }
  return num / den;
}

Integer ipow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Rational rpow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) fail(ErrorKind::division_by_zero, "0 raised to a negative power");
    Rational inv = 1 / base;
    return rpow(inv, -exponent);
  }
  Rational out(ipow(base.get_num(), static_cast<unsigned long>(exponent)),
               ipow(base.get_den(), static_cast<unsigned long>(exponent)));
  out.canonicalize();
  return out;
}

// ---------------------------------------------------------------------------
// UniPoly

UniPoly::UniPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

UniPoly::UniPoly(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) {
  trim();
}

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }

UniPoly UniPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational UniPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::pow(unsigned exponent) const {
  UniPoly out = constant(1);
  for (unsigned i = 0; i < exponent; ++i) out *= *this;
  return out;
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
  UniPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= inner;
    acc += constant(*it);
  }
  return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

namespace {

// Appends "c var^e" to a sum being rendered; handles sign and unit
// coefficients so that output reads "1/5 + 2/5 T - T^2".
void append_term(std::ostringstream& os, bool first, const Rational& c, const std::string& mono) {
  Rational mag = abs(c);
  if (first) {
    if (c < 0) os << "-";
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  if (mono.empty()) {
    os << mag.get_str();
  } else if (mag == 1) {
    os << mono;
  } else {
    os << mag.get_str() << " " << mono;
  }
}

std::string power(const std::string& var, int e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

}  // namespace

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= degree(); ++i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    append_term(os, first, c, power(var, i));
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// TruncatedSeries

TruncatedSeries::TruncatedSeries(int order, std::vector<Rational> coefficients)
    : order_(order), coeffs_(std::move(coefficients)) {
  coeffs_.resize(static_cast<std::size_t>(std::max(order, -1) + 1));
}

TruncatedSeries::TruncatedSeries(int order, const UniPoly& p)
    : TruncatedSeries(order, p.coefficients()) {}

Rational TruncatedSeries::coeff(int i) const {
  if (i < 0 || i > order_) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

TruncatedSeries TruncatedSeries::truncate(int order) const {
  return TruncatedSeries(std::min(order, order_), coeffs_);
}

TruncatedSeries TruncatedSeries::inverse() const {
  return series_quotient(UniPoly::constant(1), to_poly(), order_);
}

UniPoly TruncatedSeries::to_poly() const { return UniPoly(coeffs_); }

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int order = std::min(a.order_, b.order_);
  std::vector<Rational> v(static_cast<std::size_t>(order + 1));
  for (int i = 0; i <= order; ++i) v[static_cast<std::size_t>(i)] = a.coeff(i) + b.coeff(i);
  return TruncatedSeries(order, std::move(v));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int order = std::min(a.order_, b.order_);
  std::vector<Rational> v(static_cast<std::size_t>(order + 1));
  for (int i = 0; i <= order; ++i) v[static_cast<std::size_t>(i)] = a.coeff(i) - b.coeff(i);
  return TruncatedSeries(order, std::move(v));
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int order = std::min(a.order_, b.order_);
  std::vector<Rational> v(static_cast<std::size_t>(order + 1));
  for (int i = 0; i <= order; ++i) {
    if (a.coeff(i) == 0) continue;
    for (int j = 0; i + j <= order; ++j) v[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
  }
  return TruncatedSeries(order, std::move(v));
}

TruncatedSeries series_quotient(const UniPoly& num, const UniPoly& den, int order) {
  const Rational d0 = den.coeff(0);
  if (d0 == 0) fail(ErrorKind::division_by_zero, "series_quotient: denominator has zero constant term");
  std::vector<Rational> s(static_cast<std::size_t>(std::max(order, -1) + 1));
  for (int i = 0; i <= order; ++i) {
    Rational acc = num.coeff(i);
    for (int j = 1; j <= std::min(i, den.degree()); ++j) acc -= den.coeff(j) * s[static_cast<std::size_t>(i - j)];
    s[static_cast<std::size_t>(i)] = acc / d0;
  }
  return TruncatedSeries(order, std::move(s));
}

TruncatedSeries mobius_compose(const UniPoly& a, int order) {
  // T/(1-T) = T + T^2 + ...; Horner in the truncated ring.
  std::vector<Rational> geo(static_cast<std::size_t>(std::max(order, -1) + 1));
  for (int i = 1; i <= order; ++i) geo[static_cast<std::size_t>(i)] = 1;
  const TruncatedSeries u(order, std::move(geo));
  TruncatedSeries acc(order, UniPoly{});
  for (int j = a.degree(); j >= 0; --j) {
    acc = acc * u + TruncatedSeries(order, UniPoly::constant(a.coeff(j)));
  }
  return acc;
}

bool agree_to_common_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int order = std::min(a.order(), b.order());
  for (int i = 0; i <= order; ++i) {
    if (a.coeff(i) != b.coeff(i)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// BiPoly

BiPoly BiPoly::constant(const Rational& c) { return monomial(c, 0, 0); }

BiPoly BiPoly::monomial(const Rational& c, int i, int j) {
  BiPoly p;
  p.add_term(c, i, j);
  return p;
}

BiPoly BiPoly::from_first(const UniPoly& p) {
  BiPoly out;
  for (int i = 0; i <= p.degree(); ++i) out.add_term(p.coeff(i), i, 0);
  return out;
}

BiPoly BiPoly::from_second(const UniPoly& p) {
  BiPoly out;
  for (int j = 0; j <= p.degree(); ++j) out.add_term(p.coeff(j), 0, j);
  return out;
}

bool BiPoly::is_polynomial() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.first >= 0 && t.first.second >= 0; });
}

Rational BiPoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

void BiPoly::add_term(const Rational& c, int i, int j) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int BiPoly::min_first() const {
  int m = INT_MAX;
  for (const auto& [e, c] : terms_) m = std::min(m, e.first);
  return terms_.empty() ? 0 : m;
}

int BiPoly::min_second() const {
  int m = INT_MAX;
  for (const auto& [e, c] : terms_) m = std::min(m, e.second);
  return terms_.empty() ? 0 : m;
}

int BiPoly::max_first() const {
  int m = INT_MIN;
  for (const auto& [e, c] : terms_) m = std::max(m, e.first);
  return terms_.empty() ? 0 : m;
}

int BiPoly::max_second() const {
  int m = INT_MIN;
  for (const auto& [e, c] : terms_) m = std::max(m, e.second);
  return terms_.empty() ? 0 : m;
}

BiPoly BiPoly::pow(unsigned exponent) const {
  BiPoly out = constant(1);
  BiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) out *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return out;
}

BiPoly BiPoly::shift(int di, int dj) const {
  BiPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(Exponent{e.first + di, e.second + dj}, c);
  return out;
}

BiPoly BiPoly::substitute_second(const Rational& c) const {
  BiPoly out;
  for (const auto& [e, v] : terms_) out.add_term(v * rpow(c, e.second), e.first, 0);
  return out;
}

Rational BiPoly::operator()(const Rational& x, const Rational& y) const {
  Rational acc = 0;
  for (const auto& [e, c] : terms_) acc += c * rpow(x, e.first) * rpow(y, e.second);
  return acc;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(c, e.first, e.second);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(-c, e.first, e.second);
  return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) {
  BiPoly out;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) out.add_term(ca * cb, ea.first + eb.first, ea.second + eb.second);
  }
  terms_ = std::move(out.terms_);
  return *this;
}

BiPoly& BiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

std::string BiPoly::to_string(const std::string& x, const std::string& y) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponent, Rational>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    const int da = a.first.first + a.first.second;
    const int db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.first > b.first.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : sorted) {
    std::string mono = power(x, e.first);
    const std::string ypart = power(y, e.second);
    if (!ypart.empty()) mono = mono.empty() ? ypart : mono + " " + ypart;
    append_term(os, first, c, mono);
    first = false;
  }
  return os.str();
}

std::optional<BiPoly> divide_by_second_minus(const BiPoly& p, const Rational& c) {
  if (p.min_second() < 0) return std::nullopt;
  // Group by first exponent, then synthetic division in the second variable.
  std::map<int, std::vector<Rational>> rows;
  for (const auto& [e, v] : p.terms()) {
    auto& row = rows[e.first];
    if (row.size() <= static_cast<std::size_t>(e.second)) row.resize(static_cast<std::size_t>(e.second) + 1);
    row[static_cast<std::size_t>(e.second)] = v;
  }
  BiPoly quotient;
  for (auto& [i, row] : rows) {
    const std::size_t deg = row.size() - 1;
    if (deg == 0) {
      if (row[0] != 0) return std::nullopt;
      continue;
    }
    std::vector<Rational> q(deg);
    Rational carry = 0;
    for (std::size_t j = deg; j-- > 0;) {
      carry = row[j + 1] + carry * c;
      q[j] = carry;
    }
    const Rational remainder = row[0] + carry * c;
    if (remainder != 0) return std::nullopt;
    for (std::size_t j = 0; j < deg; ++j) quotient.add_term(q[j], i, static_cast<int>(j));
  }
  return quotient;
}

bool ratfun_equal(const RatFun& f, const RatFun& g) {
  return f.numerator * g.denominator == g.numerator * f.denominator;
}

// ---------------------------------------------------------------------------

LinearSolution solve_linear(RationalMatrix m, std::vector<Rational> rhs) {
  LinearSolution out;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::vector<int> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    std::swap(rhs[piv], rhs[r]);
    const Rational inv = 1 / m[r][c];
    for (auto& v : m[r]) v *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
      rhs[i] -= f * rhs[r];
    }
    pivot_cols.push_back(static_cast<int>(c));
    ++r;
  }
  out.rank = static_cast<int>(r);
  out.consistent = true;
  for (std::size_t i = r; i < rows; ++i) {
    if (rhs[i] != 0) out.consistent = false;
  }
  out.values.assign(cols, Rational(0));
  for (std::size_t i = 0; i < r; ++i) out.values[static_cast<std::size_t>(pivot_cols[i])] = rhs[i];
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  for (std::size_t c = 0; c < cols; ++c) {
    if (!is_pivot[c]) out.free_columns.push_back(static_cast<int>(c));
  }
  return out;
}

UniPoly interpolate(std::span<const Rational> xs, std::span<const Rational> ys) {
  assert(xs.size() == ys.size());
  const std::size_t n = xs.size();
  std::vector<Rational> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    }
  }
  UniPoly acc;
  for (std::size_t i = n; i-- > 0;) {
    acc *= UniPoly{-xs[i], Rational(1)};
    acc += UniPoly::constant(dd[i]);
  }
  return acc;
}

}  // namespace codezeta
