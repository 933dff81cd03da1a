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

#include <random>

#include "codezeta/error.hpp"
#include "codezeta/matroid.hpp"
#include "support.hpp"

namespace codezeta {
namespace {

using testing::fixture;
using testing::frac;

TEST(RankProfile, MatchesSubsetOracle) {
  for (const LinearCode& c : testing::random_corpus(25, 51)) {
    const int n = c.length();
    RankProfile expected(static_cast<std::size_t>(n) + 1, std::vector<std::uint64_t>(c.dimension() + 1));
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      ++expected[__builtin_popcount(mask)][testing::column_rank(c, mask)];
    }
    EXPECT_EQ(rank_profile(c), expected);
  }
}

TEST(RankProfile, CapacityLimit) {
  std::mt19937_64 rng(1);
  const LinearCode wide = testing::random_code(rng, 2, kSubsetLengthCap + 1, 3);
  try {
    rank_profile(wide);
    ADD_FAILURE() << "expected a capacity error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::capacity);
  }
}

TEST(RankGen, RepetitionAndUnitCode) {
  // {00,11}: ranks 0,1,1,1 on {}, {1}, {2}, {1,2}.
  const auto w = rank_gen_poly(load_code(fixture("rep21.code")));
  EXPECT_EQ(w.W.to_string(), "x + y + 2");
  const auto wn = normalized_rank_gen(load_code(fixture("code10.code")));
  EXPECT_EQ(wn.Wn, BiPoly::monomial(1, 1, 0) + BiPoly::monomial(frac(1, 2), 1, 1) + BiPoly::constant(frac(1, 2)) +
                       BiPoly::monomial(1, 0, 1));
}

TEST(RankGen, NormalizedMatchesOracle) {
  for (const LinearCode& c : testing::random_corpus(20, 53)) {
    const BiPoly expected = testing::normalized_rank_gen_oracle(
        c.length(), c.dimension(), [&](std::uint32_t m) { return testing::column_rank(c, m); });
    EXPECT_EQ(normalized_rank_gen(c).Wn, expected);
  }
}

TEST(RankGen, MdsNormalizedForm) {
  // W_n = x^k + ... + x + 1 + y + ... + y^(n-k)
  for (auto [q, n, k] : {std::tuple{5, 5, 2}, {4, 4, 2}, {7, 6, 3}}) {
    BiPoly expected;
    for (int i = 0; i <= k; ++i) expected.add_term(1, i, 0);
    for (int j = 1; j <= n - k; ++j) expected.add_term(1, 0, j);
    EXPECT_EQ(normalized_rank_gen(make_mds_code(q, n, k)).Wn, expected);
  }
}

TEST(WnPlus, MdsClosedForm) {
  const BiPoly one_minus_x = BiPoly::constant(1) - BiPoly::monomial(1, 1, 0);
  const BiPoly one_minus_y = BiPoly::constant(1) - BiPoly::monomial(1, 0, 1);
  const RatFun expected{BiPoly::constant(1) - BiPoly::monomial(1, 1, 1), one_minus_x * one_minus_y};
  for (auto [q, n, k] : {std::tuple{5, 5, 2}, {4, 4, 2}, {7, 6, 3}}) {
    EXPECT_TRUE(ratfun_equal(wn_plus(normalized_rank_gen(make_mds_code(q, n, k))), expected));
  }
}

TEST(Greene, FixturesAndCorpus) {
  std::vector<LinearCode> codes = testing::random_corpus(30, 57);
  for (const char* name : {"hamming74.code", "ext_hamming84.code", "hexacode.code", "rep21.code", "code10.code"}) {
    codes.push_back(load_code(fixture(name)));
  }
  for (const LinearCode& c : codes) {
    const auto w = weight_distribution(c);
    EXPECT_TRUE(check_greene(w, rank_gen_poly(c)));
    EXPECT_TRUE(check_greene_normalized(w, normalized_rank_gen(c)));
  }
}

TEST(Greene, DetectsWrongDistribution) {
  const LinearCode c = load_code(fixture("hamming74.code"));
  auto w = weight_distribution(c);
  w.counts[3] -= 1;
  w.counts[4] += 1;
  EXPECT_FALSE(check_greene(w, rank_gen_poly(c)));
  EXPECT_FALSE(check_greene_normalized(w, normalized_rank_gen(c)));
}

TEST(Greene, ExtensionFieldPrediction) {
  // The GF(4) span of the binary Hamming generator has the same matroid.
  const LinearCode binary = load_code(fixture("hamming74.code"));
  const LinearCode lifted(Field(4), binary.generator());
  const auto predicted = greene_predict(rank_gen_poly(binary), 4);
  const auto direct = testing::brute_weights(lifted);
  for (int i = 0; i <= 7; ++i) EXPECT_EQ(predicted[i], Rational(direct[i]));
}

TEST(Greene, SymmetricFormForSelfComplementaryCodes) {
  for (const char* name : {"ext_hamming84.code", "rep21.code", "rep21x2.code"}) {
    const LinearCode c = load_code(fixture(name));
    EXPECT_TRUE(check_greene_normalized_symmetric(weight_distribution(c), normalized_rank_gen(c))) << name;
  }
}

TEST(PunctureShorten, AveragedWnMatchesMinorOracle) {
  for (const LinearCode& c : testing::random_corpus(20, 61)) {
    const int n = c.length();
    const int k = c.dimension();
    const auto wn = normalized_rank_gen(c);
    BiPoly deletion_sum;
    BiPoly contraction_sum;
    for (int j = 0; j < n; ++j) {
      // Reindex subsets of the other n - 1 coordinates.
      const auto expand = [&](std::uint32_t m) {
        const std::uint32_t low = m & ((1u << j) - 1u);
        return low | ((m >> j) << (j + 1));
      };
      const int rj = testing::column_rank(c, 1u << j);
      deletion_sum += testing::normalized_rank_gen_oracle(
          n - 1, k, [&](std::uint32_t m) { return testing::column_rank(c, expand(m)); });
      contraction_sum += testing::normalized_rank_gen_oracle(
          n - 1, k - rj, [&](std::uint32_t m) { return testing::column_rank(c, expand(m) | (1u << j)) - rj; });
    }
    const Rational inv_n = frac(1, n);
    EXPECT_EQ(puncture_shorten_wn(wn, CoordinateOp::puncture).Wn, deletion_sum * inv_n);
    EXPECT_EQ(puncture_shorten_wn(wn, CoordinateOp::shorten).Wn, contraction_sum * inv_n);
  }
}

TEST(PunctureShorten, WnPlusInvariant) {
  for (const LinearCode& c : testing::random_corpus(40, 67)) {
    const auto wn = normalized_rank_gen(c);
    const RatFun base = wn_plus(wn);
    EXPECT_TRUE(ratfun_equal(base, wn_plus(puncture_shorten_wn(wn, CoordinateOp::puncture))));
    EXPECT_TRUE(ratfun_equal(base, wn_plus(puncture_shorten_wn(wn, CoordinateOp::shorten))));
  }
}

TEST(Duality, Classification) {
  EXPECT_EQ(classify_duality(load_code(fixture("ext_hamming84.code"))), DualityClass::self_dual);
  EXPECT_EQ(classify_duality(load_code(fixture("rep21.code"))), DualityClass::self_dual);
  EXPECT_EQ(classify_duality(load_code(fixture("hexacode.code"))), DualityClass::formally_self_dual);
  EXPECT_EQ(classify_duality(load_code(fixture("hamming74.code"))), DualityClass::contains_dual);
  EXPECT_EQ(classify_duality(dual_code(load_code(fixture("hamming74.code")))), DualityClass::other);
  EXPECT_STREQ(to_string(DualityClass::self_dual), "self-dual");
}

TEST(Clifford, SelfDualCodesPass) {
  std::mt19937_64 rng(2026);
  std::vector<LinearCode> codes{load_code(fixture("ext_hamming84.code")), load_code(fixture("rep21x2.code")),
                                testing::random_binary_self_dual(rng, 10)};
  for (const LinearCode& c : codes) {
    const auto report = clifford_check(c, {});
    EXPECT_EQ(report.visited, 1u << c.length());
    EXPECT_EQ(report.violations, 0u);
    EXPECT_EQ(report.failed_decompositions, 0u);
    EXPECT_TRUE(report.passes());
    EXPECT_TRUE(find_two_disjoint_bases(c).has_value());
  }
}

TEST(Clifford, DecomposableWitnesses) {
  const auto report = clifford_check(load_code(fixture("rep21x2.code")), {});
  // {1,2} and {3,4}, 0-based {0,1} and {2,3}.
  EXPECT_EQ(report.equality_witnesses, 2u);
  ASSERT_FALSE(report.witness_samples.empty());
  EXPECT_TRUE(report.witness_samples[0].decomposes);
  EXPECT_EQ(report.witness_samples[0].dim_on_subset, 1);
}

TEST(Clifford, UnitCodeViolation) {
  const auto report = clifford_check(load_code(fixture("code10.code")), {});
  EXPECT_GT(report.violations, 0u);
  ASSERT_TRUE(report.first_violation.has_value());
  EXPECT_EQ(*report.first_violation, std::vector<int>{1});
  EXPECT_FALSE(report.passes());
}

TEST(Clifford, SamplingIsReproducible) {
  std::mt19937_64 rng(9);
  const LinearCode c = testing::random_binary_self_dual(rng, 20);
  const CliffordMode mode{false, 500, 77};
  const auto a = clifford_check(c, mode);
  const auto b = clifford_check(c, mode);
  EXPECT_EQ(a.visited, 500u);
  EXPECT_EQ(a.equality_witnesses, b.equality_witnesses);
  EXPECT_EQ(a.violations, 0u);
}

TEST(Clifford, DecompositionCheckOnNonWitness) {
  const LinearCode c = load_code(fixture("ext_hamming84.code"));
  EXPECT_FALSE(check_decomposition(c, {0, 1, 2, 3}).decomposes);
}

TEST(TwoDisjointBases, FirstInLexOrder) {
  const auto parts = find_two_disjoint_bases(load_code(fixture("rep21x2.code")));
  ASSERT_TRUE(parts.has_value());
  EXPECT_EQ(parts->first, (std::vector<int>{0, 2}));
  EXPECT_EQ(parts->second, (std::vector<int>{1, 3}));
  EXPECT_FALSE(find_two_disjoint_bases(load_code(fixture("code10.code"))).has_value());
}

}  // namespace
}  // namespace codezeta
