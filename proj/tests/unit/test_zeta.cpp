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

#include "codezeta/error.hpp"
#include "codezeta/matroid.hpp"
#include "codezeta/zeta.hpp"
#include "support.hpp"

namespace codezeta {
namespace {

using testing::fixture;
using testing::frac;

ZetaPolynomial zeta_of(const std::string& name) { return zeta_polynomial(weight_distribution(load_code(fixture(name)))); }

TEST(Zeta, Hamming) {
  const auto w = weight_distribution(load_code(fixture("hamming74.code")));
  const auto series = zeta_from_normalized(w);
  const auto bivariate = zeta_from_enumerator_bivariate(w);
  const UniPoly expected{frac(1, 5), frac(2, 5), frac(2, 5)};
  EXPECT_EQ(series.P, expected);
  EXPECT_EQ(bivariate.P, expected);
  EXPECT_EQ(series.P.to_string(), "1/5 + 2/5 T + 2/5 T^2");
  EXPECT_EQ(series.g, 1);
  EXPECT_EQ(series.g_dual, 1);
}

TEST(Zeta, ExtendedHammingAndRepetition) {
  EXPECT_EQ(zeta_of("ext_hamming84.code").P, (UniPoly{frac(1, 5), frac(2, 5), frac(2, 5)}));
  EXPECT_EQ(zeta_of("rep21.code").P, UniPoly::constant(1));
  EXPECT_EQ(zeta_of("hexacode.code").P, UniPoly::constant(1));
}

TEST(Zeta, MdsCodesHaveTrivialPolynomial) {
  for (auto [q, n, k] : {std::tuple{5, 5, 2}, {4, 4, 2}, {7, 6, 3}}) {
    EXPECT_EQ(zeta_polynomial(weight_distribution(make_mds_code(q, n, k))).P, UniPoly::constant(1));
  }
}

TEST(Zeta, FunctionalEquationAgainstDual) {
  for (const LinearCode& c : testing::nondegenerate_corpus(40, 41)) {
    const auto w = weight_distribution(c);
    const auto dual = macwilliams(w);
    const auto p = zeta_polynomial(w);
    const auto pd = zeta_polynomial(dual);
    EXPECT_EQ(p.P.degree(), w.n + 2 - w.d - w.d_dual);
    EXPECT_EQ(p.P(Rational(1)), Rational(1));
    EXPECT_TRUE(check_functional_equation(p, pd));
    EXPECT_TRUE(check_functional_equation(pd, p));
  }
}

TEST(Zeta, FunctionalEquationDetectsMismatch) {
  const auto p = zeta_of("hamming74.code");
  auto wrong = p;
  wrong.P = UniPoly{frac(1, 3), frac(2, 3)};
  EXPECT_FALSE(check_functional_equation(p, wrong));
}

TEST(Zeta, DistanceBoundRelation) {
  const auto w = weight_distribution(load_code(fixture("hamming74.code")));
  const auto p = zeta_polynomial(w);
  const auto b = distance_bound_from_zeta(p, normalize(w).a_list);
  EXPECT_EQ(b.a, Rational(2));
  EXPECT_TRUE(b.relation_holds);
  EXPECT_EQ(b.bound, Rational(5));
  EXPECT_TRUE(b.bound_holds);
}

TEST(Zeta, DistanceRelationUndefinedAtFullDistance) {
  const auto w = weight_distribution(load_code(fixture("rep21.code")));
  const auto b = distance_bound_from_zeta(zeta_polynomial(w), normalize(w).a_list);
  EXPECT_FALSE(b.relation_defined);
  EXPECT_FALSE(b.relation_holds);
}

TEST(Zeta, RejectsCodeWithoutNonzeroWords) {
  WeightDistribution empty{2, 4, 0, testing::ints({1, 0, 0, 0, 0}), 5, 1};
  EXPECT_THROW(zeta_polynomial(empty), Error);
}

TEST(TwoVarZeta, MdsClosedForm) {
  for (auto [q, n, k] : {std::tuple{5, 5, 2}, {4, 4, 2}, {7, 6, 3}}) {
    const LinearCode c = make_mds_code(q, n, k);
    const auto w = weight_distribution(c);
    const auto z = two_var_zeta(wn_plus(normalized_rank_gen(c)), n, k, n + 1 - k - w.d);
    const BiPoly one_minus_t = BiPoly::constant(1) - BiPoly::monomial(1, 1, 0);
    const BiPoly one_minus_ut = BiPoly::constant(1) - BiPoly::monomial(1, 1, 1);
    EXPECT_TRUE(ratfun_equal(z.value, RatFun{BiPoly::constant(1), one_minus_t * one_minus_ut}));
  }
}

TEST(TwoVarZeta, SpecializesToOneVariableZeta) {
  for (const LinearCode& c : testing::random_corpus(30, 43)) {
    const auto w = weight_distribution(c);
    const auto p = zeta_polynomial(w);
    const auto z = two_var_zeta(wn_plus(normalized_rank_gen(c)), c.length(), c.dimension(), p.g);
    EXPECT_TRUE(check_two_var_compat(z, p));
  }
}

TEST(TwoVarZeta, HammingSpecialization) {
  const LinearCode c = load_code(fixture("hamming74.code"));
  const auto p = zeta_polynomial(weight_distribution(c));
  const auto z = two_var_zeta(wn_plus(normalized_rank_gen(c)), 7, 4, p.g);
  EXPECT_TRUE(check_two_var_compat(z, p));
  EXPECT_TRUE(ratfun_equal(one_var_zeta(p), RatFun{BiPoly::from_first(p.P),
                                                    BiPoly::from_first(UniPoly{Rational(1), Rational(-3), Rational(2)})}));
}

}  // namespace
}  // namespace codezeta
