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

#include "codezeta/enumerator.hpp"

#include "codezeta/error.hpp"

namespace codezeta {

Integer krawtchouk(int q, int n, int j, int i) {
  Integer sum = 0;
  for (int s = 0; s <= j; ++s) {
    Integer term = ipow(Integer(q - 1), static_cast<unsigned long>(j - s)) * binomial(i, s) * binomial(n - i, j - s);
    if (s % 2) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

WeightDistribution macwilliams(const WeightDistribution& a) {
  const int n = a.n;
  const Integer size = a.total();
  // |C| must be q^k.
  Integer expected = ipow(Integer(a.q), static_cast<unsigned long>(a.k));
  if (size != expected) {
    fail(ErrorKind::invalid_distribution, "distribution total " + size.get_str() + " is not q^k");
  }
  WeightDistribution out{a.q, n, n - a.k, std::vector<Integer>(static_cast<std::size_t>(n) + 1), 0, 0};
  for (int j = 0; j <= n; ++j) {
    Integer acc = 0;
    for (int i = 0; i <= n; ++i) {
      if (a.counts[static_cast<std::size_t>(i)] != 0) acc += a.counts[static_cast<std::size_t>(i)] * krawtchouk(a.q, n, j, i);
    }
    if (!mpz_divisible_p(acc.get_mpz_t(), size.get_mpz_t()) || acc < 0) {
      fail(ErrorKind::invalid_distribution,
           "MacWilliams transform gives a non-integral or negative count at weight " + std::to_string(j));
    }
    out.counts[static_cast<std::size_t>(j)] = acc / size;
  }
  out.d = minimum_distance(out.counts);
  out.d_dual = minimum_distance(a.counts);
  return out;
}

std::vector<Rational> macwilliams_rational(int q, std::span<const Rational> counts, const Rational& size) {
  const int n = static_cast<int>(counts.size()) - 1;
  std::vector<Rational> out(counts.size());
  for (int j = 0; j <= n; ++j) {
    Rational acc = 0;
    for (int i = 0; i <= n; ++i) acc += counts[static_cast<std::size_t>(i)] * Rational(krawtchouk(q, n, j, i));
    out[static_cast<std::size_t>(j)] = acc / size;
  }
  return out;
}

RationalDistribution RationalDistribution::from(const WeightDistribution& a) {
  RationalDistribution r{a.q, a.n, {}};
  for (const auto& c : a.counts) r.counts.emplace_back(c);
  return r;
}

Rational RationalDistribution::total() const {
  Rational t = 0;
  for (const auto& c : counts) t += c;
  return t;
}

int RationalDistribution::min_weight() const {
  for (int i = 1; i <= n; ++i) {
    if (counts[static_cast<std::size_t>(i)] != 0) return i;
  }
  return n + 1;
}

BiPoly RationalDistribution::homogeneous() const {
  BiPoly p;
  for (int i = 0; i <= n; ++i) p.add_term(counts[static_cast<std::size_t>(i)], n - i, i);
  return p;
}

BiPoly homogeneous_enumerator(const WeightDistribution& a) {
  return RationalDistribution::from(a).homogeneous();
}

RationalDistribution puncture_avg(const RationalDistribution& a) {
  if (a.n < 2) fail(ErrorKind::domain, "puncturing needs n >= 2");
  RationalDistribution out{a.q, a.n - 1, std::vector<Rational>(static_cast<std::size_t>(a.n))};
  for (int j = 0; j < a.n; ++j) {
    // x^{n-j-1} y^j collects d/dx of A_j and d/dy of A_{j+1}.
    Rational v = Rational(a.n - j) * a.counts[static_cast<std::size_t>(j)] +
                 Rational(j + 1) * a.counts[static_cast<std::size_t>(j + 1)];
    out.counts[static_cast<std::size_t>(j)] = v / a.n;
  }
  return out;
}

RationalDistribution shorten_avg(const RationalDistribution& a) {
  if (a.n < 2) fail(ErrorKind::domain, "shortening needs n >= 2");
  RationalDistribution out{a.q, a.n - 1, std::vector<Rational>(static_cast<std::size_t>(a.n))};
  for (int j = 0; j < a.n; ++j) {
    Rational v = Rational(a.n - j) * a.counts[static_cast<std::size_t>(j)];
    out.counts[static_cast<std::size_t>(j)] = v / a.n;
  }
  return out;
}

NormalizedEnumerator normalize(const RationalDistribution& a) {
  NormalizedEnumerator out;
  out.q = a.q;
  out.n = a.n;
  out.d = a.min_weight();
  for (int w = 0; w <= a.n; ++w) {
    Rational v = a.counts[static_cast<std::size_t>(w)] / Rational(binomial(a.n, w));
    out.a_list.push_back(v);
  }
  std::vector<Rational> coeffs;
  for (int w = out.d; w <= a.n; ++w) {
    Rational v = out.a_list[static_cast<std::size_t>(w)] / (a.q - 1);
    coeffs.push_back(v);
  }
  out.a_poly = UniPoly(std::move(coeffs));
  return out;
}

NormalizedEnumerator normalize(const WeightDistribution& a) {
  if (a.d < 1) fail(ErrorKind::domain, "normalize needs d >= 1");
  return normalize(RationalDistribution::from(a));
}

TruncatedSeries truncation_invariant(const NormalizedEnumerator& a) {
  const int order = a.n - a.d;
  const UniPoly one_plus_t{Rational(1), Rational(1)};
  const UniPoly binom = one_plus_t.pow(static_cast<unsigned>(std::max(a.d, 0)));
  return TruncatedSeries(order, a.a_poly * binom);
}

}  // namespace codezeta
