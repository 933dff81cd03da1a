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

#include <gtest/gtest.h>

#include "codezeta/bounds.hpp"
#include "codezeta/enumerator.hpp"
#include "codezeta/error.hpp"
#include "codezeta/extremal.hpp"
#include "support.hpp"

namespace codezeta {
namespace {

using testing::frac;

std::vector<Rational> rats(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

TEST(Extremal, SmallTypes) {
  const auto rep = extremal_sd_enumerator(2, 2, 2);
  EXPECT_EQ(rep.A, rats({1, 0, 1}));
  EXPECT_EQ(rep.d, 2);
  const auto e8 = extremal_sd_enumerator(2, 4, 8);
  EXPECT_EQ(e8.A, rats({1, 0, 0, 0, 14, 0, 0, 0, 1}));
  EXPECT_EQ(e8.d, 4);
  EXPECT_TRUE(e8.unique);
  const auto hex = extremal_sd_enumerator(4, 2, 6);
  EXPECT_EQ(hex.A, rats({1, 0, 0, 0, 45, 0, 18}));
}

TEST(Extremal, QuaternaryFamily) {
  const auto n12 = extremal_sd_enumerator(4, 2, 12);
  EXPECT_EQ(n12.d, 6);
  EXPECT_EQ(n12.A, rats({1, 0, 0, 0, 0, 0, 396, 0, 1485, 0, 1980, 0, 234}));
  const auto n18 = extremal_sd_enumerator(4, 2, 18);
  EXPECT_EQ(n18.d, 8);
  EXPECT_EQ(n18.A, rats({1, 0, 0, 0, 0, 0, 0, 0, 2754, 0, 18360, 0, 77112, 0, 110160, 0, 50949, 0, 2808}));
  EXPECT_TRUE(n18.nonnegative);
}

TEST(Extremal, TernaryTwelve) {
  const auto t = extremal_sd_enumerator(3, 3, 12);
  EXPECT_EQ(t.d, 6);
  EXPECT_EQ(t.bound, 6);
  EXPECT_EQ(t.A, rats({1, 0, 0, 0, 0, 0, 264, 0, 0, 440, 0, 0, 24}));
  EXPECT_FALSE(extremal_system(3, 3, 12, 9).consistent);
}

TEST(Extremal, GenericPipelineRechecks) {
  for (auto [q, c, n] : {std::tuple{2, 2, 2}, {2, 4, 8}, {2, 2, 8}, {3, 3, 12}, {4, 2, 6}, {4, 2, 12}, {4, 2, 18}}) {
    const auto e = extremal_sd_enumerator(q, c, n);
    ASSERT_TRUE(e.unique);
    const WeightDistribution w = e.distribution();
    EXPECT_EQ(macwilliams(w).counts, w.counts);
    EXPECT_EQ(divisibility(w) % c, 0);
    EXPECT_EQ(e.d, e.bound);
  }
}

TEST(Extremal, AmbiguityIsReported) {
  // Type I at n = 16: the system at the maximal d leaves a free parameter.
  const auto e = extremal_sd_enumerator(2, 2, 16);
  if (!e.unique) EXPECT_GT(e.solution_dimension, 0);
  EXPECT_EQ(e.A[0], Rational(1));
}

TEST(Extremal, RejectsUnknownTypes) {
  EXPECT_THROW(extremal_sd_enumerator(5, 1, 4), Error);
  EXPECT_THROW(extremal_sd_enumerator(2, 4, 12), Error);
  EXPECT_THROW(extremal_sd_enumerator(3, 3, 6), Error);
}

TEST(Gegenbauer, Examples) {
  EXPECT_EQ(gegenbauer(0, Rational(5)).poly, UniPoly::constant(1));
  EXPECT_EQ(gegenbauer(1, Rational(2)).poly, (UniPoly{Rational(0), Rational(4)}));
  EXPECT_EQ(gegenbauer(2, Rational(3)).poly, (UniPoly{Rational(-3), Rational(0), Rational(24)}));
}

TEST(Gegenbauer, ParityDegreeAndRealZeros) {
  for (int m = 0; m <= 9; ++m) {
    const auto c = gegenbauer(m, Rational(m + 1));
    EXPECT_EQ(c.poly.degree(), m);
    for (int i = 0; i <= m; ++i) {
      if ((m - i) % 2 != 0) EXPECT_EQ(c.poly.coeff(i), 0);
    }
    EXPECT_EQ(sign_changes_on_grid(c.poly, 2000), m) << "m = " << m;
  }
}

TEST(Gegenbauer, Recurrence) {
  const Rational lambda = frac(3, 2);
  const UniPoly x{Rational(0), Rational(1)};
  for (int m = 2; m <= 6; ++m) {
    const UniPoly lhs = gegenbauer(m, lambda).poly * Rational(m);
    const UniPoly rhs = x * (2 * (Rational(m - 1) + lambda)) * gegenbauer(m - 1, lambda).poly -
                        gegenbauer(m - 2, lambda).poly * (Rational(m - 2) + 2 * lambda);
    EXPECT_EQ(lhs, rhs);
  }
}

ZetaPolynomial extremal_zeta(int m) { return zeta_polynomial(extremal_sd_enumerator(4, 2, 3 * m + 3).distribution()); }

TEST(Ultraspherical, FamilyHolds) {
  const std::vector<Rational> lambdas{frac(1, 2), frac(1, 140), frac(1, 12012)};
  for (int i = 0; i < 3; ++i) {
    const int m = 2 * i + 1;
    const auto p = extremal_zeta(m);
    const auto r = check_ultraspherical(p, m);
    EXPECT_TRUE(r.holds) << "m = " << m;
    EXPECT_EQ(r.lambda_m, lambdas[i]);
  }
  EXPECT_EQ(extremal_zeta(3).P, (UniPoly{frac(1, 7), frac(2, 7), frac(4, 7)}));
}

TEST(Ultraspherical, DetectsPerturbation) {
  auto p = extremal_zeta(3);
  p.P = p.P + UniPoly::monomial(frac(1, 100), 1);
  EXPECT_FALSE(check_ultraspherical(p, 3).holds);
  EXPECT_THROW(check_ultraspherical(p, 2), Error);
}

TEST(CriticalCircle, Radii) {
  for (int m : {3, 5}) {
    for (double r : critical_circle_radii(extremal_zeta(m))) EXPECT_NEAR(r, 0.5, 1e-9);
  }
  ZetaPolynomial hamming;
  hamming.P = UniPoly{Rational(1), Rational(2), Rational(2)};
  for (double r : critical_circle_radii(hamming)) EXPECT_NEAR(r, std::sqrt(0.5), 1e-9);
  ZetaPolynomial linear;
  linear.P = UniPoly{Rational(3), Rational(-2)};
  EXPECT_EQ(critical_circle_radii(linear), std::vector<double>{1.5});
  EXPECT_THROW(critical_circle_radii(extremal_zeta(1)), Error);
}

}  // namespace
}  // namespace codezeta
