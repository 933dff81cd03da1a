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

#include "codezeta/enumerator.hpp"
#include "codezeta/error.hpp"
#include "support.hpp"

namespace codezeta {
namespace {

using testing::fixture;
using testing::frac;
using testing::ints;

TEST(Krawtchouk, SmallValues) {
  // K_1(i) = (q-1)(n-i) - i
  for (int i = 0; i <= 5; ++i) EXPECT_EQ(krawtchouk(3, 5, 1, i), 2 * (5 - i) - i);
  EXPECT_EQ(krawtchouk(2, 4, 0, 3), 1);
  EXPECT_EQ(krawtchouk(2, 4, 4, 1), -1);
}

TEST(MacWilliams, HammingToSimplex) {
  const auto h = weight_distribution(load_code(fixture("hamming74.code")));
  const auto s = macwilliams(h);
  EXPECT_EQ(s.counts, ints({1, 0, 0, 0, 7, 0, 0, 0}));
  EXPECT_EQ(s.k, 3);
  EXPECT_EQ(macwilliams(s).counts, h.counts);
}

TEST(MacWilliams, RejectsInvalid) {
  WeightDistribution bad{2, 4, 2, ints({1, 0, 0, 0, 3}), 4, 1};
  EXPECT_THROW(macwilliams(bad), Error);
  WeightDistribution odd_total{2, 3, 1, ints({1, 0, 0, 2}), 3, 1};
  EXPECT_THROW(macwilliams(odd_total), Error);
}

TEST(MacWilliams, InvolutionOnCorpus) {
  for (const LinearCode& c : testing::random_corpus(40, 21)) {
    const auto w = weight_distribution(c);
    EXPECT_EQ(macwilliams(w).counts, testing::brute_weights(dual_code(c)));
  }
}

TEST(AveragedOperators, MatchConcreteAverages) {
  for (const LinearCode& c : testing::random_corpus(30, 8)) {
    const auto a = RationalDistribution::from(weight_distribution(c));
    EXPECT_EQ(puncture_avg(a).counts, testing::concrete_puncture_average(c));
    EXPECT_EQ(shorten_avg(a).counts, testing::concrete_shorten_average(c));
  }
}

TEST(Normalize, HexacodeAndHamming) {
  const auto hex = normalize(weight_distribution(load_code(fixture("hexacode.code"))));
  EXPECT_EQ(hex.d, 4);
  EXPECT_EQ(hex.a_poly, (UniPoly{Rational(1), Rational(0), Rational(6)}));
  const auto ham = normalize(weight_distribution(load_code(fixture("hamming74.code"))));
  EXPECT_EQ(ham.a_list[3], frac(1, 5));
  EXPECT_EQ(ham.a_list[4], frac(1, 5));
  EXPECT_EQ(ham.a_poly, (UniPoly{frac(1, 5), frac(1, 5), Rational(0), Rational(0), Rational(1)}));
}

TEST(Normalize, AveragedPunctureMultipliesByOnePlusT) {
  // b_j = a_j + a_{j+1}, so b(t) = a(t)(1 + t) when d is unchanged.
  for (const LinearCode& c : testing::random_corpus(30, 17)) {
    const auto w = weight_distribution(c);
    if (w.d < 2) continue;
    const auto a = normalize(w);
    const auto b = normalize(puncture_avg(RationalDistribution::from(w)));
    if (b.d != a.d - 1) continue;
    for (int j = 1; j < w.n - 1; ++j) {
      EXPECT_EQ(b.a_list[j], a.a_list[j] + a.a_list[j + 1]);
    }
  }
}

TEST(TruncationInvariant, PreservedUnderAveraging) {
  for (const LinearCode& c : testing::random_corpus(40, 29)) {
    const auto w = weight_distribution(c);
    if (w.d < 2 || w.d_dual < 2) continue;
    const auto base = truncation_invariant(normalize(w));
    const auto r = RationalDistribution::from(w);
    EXPECT_TRUE(agree_to_common_order(base, truncation_invariant(normalize(puncture_avg(r)))));
    EXPECT_TRUE(agree_to_common_order(base, truncation_invariant(normalize(shorten_avg(r)))));
  }
}

TEST(HomogeneousEnumerator, Hamming) {
  const auto h = weight_distribution(load_code(fixture("hamming74.code")));
  EXPECT_EQ(homogeneous_enumerator(h).to_string(), "x^7 + 7 x^4 y^3 + 7 x^3 y^4 + y^7");
}

}  // namespace
}  // namespace codezeta
