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

#include "report.hpp"

#include <cmath>

#include "codezeta/bounds.hpp"
#include "codezeta/enumerator.hpp"
#include "codezeta/error.hpp"
#include "codezeta/extremal.hpp"
#include "codezeta/matroid.hpp"
#include "codezeta/zeta.hpp"

namespace codezeta::report {

namespace {

constexpr double kRadiusTolerance = 1e-9;
constexpr std::uint64_t kDefaultSamples = 4096;

Json rat(const Rational& r) { return to_string(r); }

Json rat_list(const std::vector<Rational>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(rat(x));
  return out;
}

Json int_list(const std::vector<Integer>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(x.get_str());
  return out;
}

Json poly(const UniPoly& p, const std::string& var) {
  return {{"coefficients", rat_list(p.coefficients())}, {"text", p.to_string(var)}};
}

Json bipoly(const BiPoly& p, const std::string& x, const std::string& y) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json::array({e.first, e.second, rat(c)}));
  return {{"terms", terms}, {"text", p.to_string(x, y)}};
}

Json ratfun(const RatFun& f, const std::string& x, const std::string& y) {
  return {{"numerator", bipoly(f.numerator, x, y)}, {"denominator", bipoly(f.denominator, x, y)}};
}

Json code_info(const LinearCode& code) {
  return {{"q", code.q()}, {"n", code.length()}, {"k", code.dimension()}};
}

Json one_based(const std::vector<int>& cols) {
  Json out = Json::array();
  for (int c : cols) out.push_back(c + 1);
  return out;
}

Json inequality(const Inequality& i) { return {{"lhs", i.lhs}, {"rhs", i.rhs}, {"holds", i.holds()}}; }

Json audit(const ZeroAudit& a) {
  return {{"zeros", a.zeros}, {"lower_bound", rat(a.lower_bound)}, {"meets", a.meets}};
}

bool nondegenerate(const WeightDistribution& w) { return w.d >= 2 && w.d_dual >= 2 && w.d_dual <= w.n; }

Json zeta_section(const ZetaPolynomial& p) {
  return {{"P", poly(p.P, "T")}, {"g", p.g}, {"g_dual", p.g_dual}, {"degree", p.P.degree()}};
}

}  // namespace

Json weights(const LinearCode& code) {
  const WeightDistribution w = weight_distribution(code);
  const WeightDistribution dual = macwilliams(w);
  return {{"command", "weights"},
          {"code", code_info(code)},
          {"distribution", int_list(w.counts)},
          {"dual_distribution", int_list(dual.counts)},
          {"total", w.total().get_str()},
          {"d", w.d},
          {"d_dual", w.d_dual},
          {"passed", true}};
}

Json zeta(const LinearCode& code) {
  const WeightDistribution w = weight_distribution(code);
  const bool regular = nondegenerate(w);
  const ZetaPolynomial series = zeta_from_normalized(w);
  Json out{{"command", "zeta"}, {"code", code_info(code)}, {"nondegenerate", regular}, {"d", w.d},
           {"d_dual", w.d_dual}};
  out.update(zeta_section(series));
  out["expected_degree"] = w.n + 2 - w.d - w.d_dual;
  out["P_at_1"] = rat(series.P(Rational(1)));
  if (!regular) {
    // The series route stops at n - d, short of the full degree; nothing
    // below is asserted outside d, d_dual >= 2.
    out["P_bivariate"] = nullptr;
    out["routes_agree"] = nullptr;
    out["functional_equation"] = nullptr;
    out["distance_bound"] = nullptr;
    out["passed"] = true;
    return out;
  }
  const ZetaPolynomial bivariate = zeta_from_enumerator_bivariate(w);
  const bool agree = series.P == bivariate.P;
  const ZetaPolynomial dual = zeta_polynomial(macwilliams(w));
  const bool fe = check_functional_equation(series, dual);
  const DistanceBound b = distance_bound_from_zeta(series, normalize(w).a_list);
  out["P_bivariate"] = poly(bivariate.P, "T");
  out["routes_agree"] = agree;
  out["dual_P"] = poly(dual.P, "T");
  out["functional_equation"] = fe;
  out["distance_bound"] = {{"a", rat(b.a)},
                           {"lhs", rat(b.lhs)},
                           {"rhs", rat(b.rhs)},
                           {"relation_defined", b.relation_defined},
                           {"relation_holds", b.relation_holds},
                           {"bound", rat(b.bound)},
                           {"bound_holds", b.bound_holds}};
  out["passed"] = agree && fe && (!b.relation_defined || b.relation_holds) && b.bound_holds && series.P(Rational(1)) == 1 &&
                  series.P.degree() == w.n + 2 - w.d - w.d_dual;
  return out;
}

Json rankgen(const LinearCode& code) {
  const int n = code.length();
  const int k = code.dimension();
  const RankProfile profile = rank_profile(code);
  const NormalizedRankGen wn = normalized_rank_gen(profile, n, k);
  Json layers = Json::array();
  for (const auto& row : profile) layers.push_back(row);
  return {{"command", "rankgen"},
          {"code", code_info(code)},
          {"rank_profile", layers},
          {"W", bipoly(rank_gen_poly(profile, n, k).W, "x", "y")},
          {"Wn", bipoly(wn.Wn, "x", "y")},
          {"Wn_plus", ratfun(wn_plus(wn), "x", "y")},
          {"passed", true}};
}

Json greene(const LinearCode& code) {
  const int n = code.length();
  const int k = code.dimension();
  const WeightDistribution w = weight_distribution(code);
  const RankProfile profile = rank_profile(code);
  const RankGenPoly wg = rank_gen_poly(profile, n, k);
  const NormalizedRankGen wn = normalized_rank_gen(profile, n, k);
  const bool plain = check_greene(w, wg);
  const bool normalized = check_greene_normalized(w, wn);
  bool self_complementary = code.q() == 2;
  for (int i = 0; self_complementary && i <= n; ++i) {
    self_complementary = w.counts[static_cast<std::size_t>(i)] == w.counts[static_cast<std::size_t>(n - i)];
  }
  Json symmetric = nullptr;
  bool symmetric_ok = true;
  if (self_complementary) {
    symmetric_ok = check_greene_normalized_symmetric(w, wn);
    symmetric = symmetric_ok;
  }
  return {{"command", "greene"},
          {"code", code_info(code)},
          {"predicted", rat_list(greene_predict(wg, code.q()))},
          {"distribution", int_list(w.counts)},
          {"greene", plain},
          {"greene_normalized", normalized},
          {"greene_symmetric", symmetric},
          {"passed", plain && normalized && symmetric_ok}};
}

Json twovar(const LinearCode& code) {
  const int n = code.length();
  const int k = code.dimension();
  const WeightDistribution w = weight_distribution(code);
  const ZetaPolynomial p = zeta_from_normalized(w);
  const TwoVarZeta z = two_var_zeta(wn_plus(normalized_rank_gen(code)), n, k, p.g);
  // A zero column (d_dual = 1) lifts deg P past the series truncation, so
  // the truncated P is not the one Z(T,q) carries.
  const bool applicable = w.d_dual >= 2;
  const bool compat = applicable && check_two_var_compat(z, p);
  return {{"command", "twovar"},
          {"code", code_info(code)},
          {"g", z.g},
          {"Z", ratfun(z.value, "T", "u")},
          {"P", poly(p.P, "T")},
          {"compatible", applicable ? Json(compat) : Json(nullptr)},
          // Exploratory: reported, never part of "passed".
          {"functional_equation_exploratory", check_two_var_functional_equation(z)},
          {"passed", !applicable || compat}};
}

Json bounds(const LinearCode& code) {
  const WeightDistribution w = weight_distribution(code);
  const WeightDistribution dual = macwilliams(w);
  const bool self_dual = classify_duality(code) == DualityClass::self_dual;
  const BoundsReport r = check_bounds(w, dual, self_dual);
  const NormalizedEnumerator a = normalize(w);
  Json out{{"command", "bounds"}, {"code", code_info(code)}, {"d", w.d}, {"d_dual", w.d_dual}, {"c", r.c}};
  out["singleton"] = inequality(r.singleton);
  out["distance_pair"] = inequality(r.distance_pair);
  out["divisible"] = inequality(r.divisible);
  out["binary_even_all_one"] = r.binary_even_all_one ? inequality(*r.binary_even_all_one) : Json(nullptr);
  out["h_identically_zero"] = r.h_identically_zero;
  out["h"] = poly(h_poly(a, r.c, w.d_dual), "w");
  out["h_zeros"] = audit(r.h_zeros);
  out["h_zeros_binary"] = r.h_zeros_binary ? audit(*r.h_zeros_binary) : Json(nullptr);
  if (r.self_dual_type) {
    const SelfDualType& t = *r.self_dual_type;
    out["self_dual_type"] = {{"name", t.name}, {"c", t.c}, {"bound", t.bound}, {"d", t.d},
                             {"met", t.met},   {"formal", t.formal}};
  } else {
    out["self_dual_type"] = nullptr;
  }
  bool g_ok = true;
  if (nondegenerate(w)) {
    const GwPoly g = g_poly(a, w.d_dual);
    const bool matches = g_from_zeta(zeta_polynomial(w)).g == g.g;
    bool zeros = true;
    for (int x = 2; x < w.d; ++x) zeros = zeros && g.g(Rational(x)) == 0;
    const bool average = check_subcode_average(a, w.d_dual);
    out["g"] = {{"poly", poly(g.g, "w")},
                {"degree", g.g.degree()},
                {"matches_zeta", matches},
                {"zeros_below_d", zeros},
                {"subcode_average", average}};
    g_ok = matches && zeros && average;
  } else {
    out["g"] = nullptr;
  }
  out["passed"] = r.passes() && g_ok;
  return out;
}

Json clifford(const LinearCode& code, bool exhaustive, std::uint64_t samples, std::uint64_t seed) {
  const CliffordReport r = clifford_check(code, {exhaustive, samples, seed});
  Json witnesses = Json::array();
  for (const EqualityWitness& w : r.witness_samples) {
    witnesses.push_back({{"subset", one_based(w.subset)},
                         {"dim_on_subset", w.dim_on_subset},
                         {"dim_on_complement", w.dim_on_complement},
                         {"decomposes", w.decomposes}});
  }
  Json bases = nullptr;
  if (2 * code.dimension() == code.length() && code.length() <= kSubsetLengthCap) {
    const auto parts = find_two_disjoint_bases(code);
    bases = parts ? Json{{"found", true}, {"first", one_based(parts->first)}, {"second", one_based(parts->second)}}
                  : Json{{"found", false}};
  }
  Json mode{{"exhaustive", exhaustive}};
  if (!exhaustive) {
    mode["samples"] = samples;
    mode["seed"] = seed;
  }
  return {{"command", "clifford"},
          {"code", code_info(code)},
          {"duality", to_string(r.duality)},
          {"mode", mode},
          {"visited", r.visited},
          {"violations", r.violations},
          {"first_violation", r.first_violation ? one_based(*r.first_violation) : Json(nullptr)},
          {"equality_witnesses", r.equality_witnesses},
          {"failed_decompositions", r.failed_decompositions},
          {"witness_samples", witnesses},
          {"two_disjoint_bases", bases},
          {"passed", r.passes()}};
}

Json extremal(int q, int c, int n, bool ultraspherical) {
  int m = 0;
  if (ultraspherical) {
    m = (n - 3) / 3;
    if (q != 4 || c != 2 || n < 6 || (n - 3) % 3 != 0 || m % 2 == 0) {
      fail(ErrorKind::domain, "--ultraspherical needs q = 4, c = 2 and n = 3m + 3 with m odd");
    }
  }
  const ExtremalEnumerator e = extremal_sd_enumerator(q, c, n);
  Json out{{"command", "extremal"},
           {"q", q},
           {"c", c},
           {"n", n},
           {"d", e.d},
           {"bound", e.bound},
           {"meets_bound", e.d == e.bound},
           {"distribution", rat_list(e.A)},
           {"unique", e.unique},
           {"solution_dimension", e.solution_dimension},
           {"nonnegative", e.nonnegative}};
  bool ok = e.unique && e.nonnegative;
  out["zeta"] = nullptr;
  out["ultraspherical"] = nullptr;
  if (!ok) {
    out["passed"] = false;
    return out;
  }
  const ZetaPolynomial p = zeta_polynomial(e.distribution());
  out["zeta"] = zeta_section(p);
  if (ultraspherical) {
    const UltrasphericalCheck u = check_ultraspherical(p, m);
    std::vector<double> radii;
    if (p.P.degree() >= 1) radii = critical_circle_radii(p);
    const double target = 1.0 / std::sqrt(static_cast<double>(q));
    bool on_circle = true;
    for (double r : radii) on_circle = on_circle && std::fabs(r - target) <= kRadiusTolerance;
    out["ultraspherical"] = {{"m", m},
                             {"expected_d", m + 3},
                             {"lambda", rat(u.lambda_m)},
                             {"holds", u.holds},
                             {"lhs", poly(u.lhs, "T")},
                             {"rhs", poly(u.rhs, "T")},
                             {"radii", radii},
                             {"target_radius", target},
                             {"tolerance", kRadiusTolerance},
                             {"on_circle", on_circle}};
    ok = ok && u.holds && on_circle && e.d == m + 3;
  }
  out["passed"] = ok;
  return out;
}

Json full(const LinearCode& code) {
  const bool exhaustive = code.length() <= kSubsetLengthCap;
  Json sections{{"weights", weights(code)}, {"zeta", zeta(code)},     {"rankgen", rankgen(code)},
                {"greene", greene(code)},   {"twovar", twovar(code)}, {"bounds", bounds(code)},
                {"clifford", clifford(code, exhaustive, exhaustive ? 0 : kDefaultSamples, 0)}};
  bool passed = true;
  for (const auto& [name, s] : sections.items()) passed = passed && s.at("passed").get<bool>();
  return {{"command", "report"}, {"code", code_info(code)}, {"sections", sections}, {"passed", passed}};
}

}  // namespace codezeta::report
