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

// Column-matroid invariants of a linear code: the rank-generating (Whitney)
// polynomial W(x,y) = sum_A x^(k - r(A)) y^(|A| - r(A)), its binomially
// normalized form W_n, the tail completion W_n+, Greene-type identities
// linking them to weight enumerators, and the Clifford inequality
// 2 r(A) >= |A|.

#ifndef CODEZETA_MATROID_HPP
#define CODEZETA_MATROID_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "codezeta/code.hpp"
#include "codezeta/exactmath.hpp"

namespace codezeta {

inline constexpr int kSubsetLengthCap = 22;

/// profile[i][r] = number of column subsets of size i and rank r.
using RankProfile = std::vector<std::vector<std::uint64_t>>;

/// Visits all 2^n subsets with an incremental echelon basis; throws
/// Error(capacity) for n > kSubsetLengthCap.
RankProfile rank_profile(const LinearCode& code);

struct RankGenPoly {
  BiPoly W;
  int n = 0;
  int k = 0;
};

struct NormalizedRankGen {
  BiPoly Wn;
  int n = 0;
  int k = 0;
};

RankGenPoly rank_gen_poly(const LinearCode& code);
RankGenPoly rank_gen_poly(const RankProfile& profile, int n, int k);
NormalizedRankGen normalized_rank_gen(const LinearCode& code);
NormalizedRankGen normalized_rank_gen(const RankProfile& profile, int n, int k);

/// W_n + x^(k+1)/(1-x) + y^(n-k+1)/(1-y) over the denominator (1-x)(1-y).
RatFun wn_plus(const NormalizedRankGen& wn);

/// Weight distribution predicted by W(qy/(x-y), (x-y)/y) (x-y)^k y^(n-k);
/// pass q^e to predict the extension-field distribution.
std::vector<Rational> greene_predict(const RankGenPoly& w, int q);
/// A(x,y) == W(qy/(x-y), (x-y)/y) (x-y)^k y^(n-k).
bool check_greene(const WeightDistribution& a, const RankGenPoly& w);

/// A_n(1,t)(1+t)^(n+1) == W_n(qt/(1+t), (1+t)/t)(1+t)^k t^(n-k) mod t^(n+1).
/// Throws Error(check_failed) if the substituted side keeps negative powers.
bool check_greene_normalized(const WeightDistribution& a, const NormalizedRankGen& wn);

/// The full two-sided identity in (s,t) with the reflected term built from
/// W_n itself; meaningful for binary codes with A_n(s,t) = A_n(t,s).
bool check_greene_normalized_symmetric(const WeightDistribution& a, const NormalizedRankGen& wn);

enum class CoordinateOp { puncture, shorten };

/// Puncture: W_n - y^(n-k), (n-1, k). Shorten: W_n - x^k, (n-1, k-1).
NormalizedRankGen puncture_shorten_wn(const NormalizedRankGen& wn, CoordinateOp op);

// ---------------------------------------------------------------------------

enum class DualityClass { self_dual, contains_dual, formally_self_dual, other };
const char* to_string(DualityClass c) noexcept;

DualityClass classify_duality(const LinearCode& code);

struct CliffordMode {
  bool exhaustive = true;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

struct EqualityWitness {
  std::vector<int> subset;  // 0-based columns
  int dim_on_subset = 0;      // k - r(complement)
  int dim_on_complement = 0;  // k - r(subset)
  bool decomposes = false;
};

struct CliffordReport {
  DualityClass duality = DualityClass::other;
  std::uint64_t visited = 0;
  std::uint64_t violations = 0;
  std::optional<std::vector<int>> first_violation;
  std::uint64_t equality_witnesses = 0;
  std::uint64_t failed_decompositions = 0;
  /// First few witnesses, in visiting order.
  std::vector<EqualityWitness> witness_samples;

  /// For codes containing their dual: no violations, and every witness of
  /// a self-dual code decomposes.
  bool passes() const noexcept;
};

/// Exhaustive mode visits all 2^n subsets (n <= kSubsetLengthCap).
CliffordReport clifford_check(const LinearCode& code, const CliffordMode& mode);

/// Decomposition test for one subset: the subcodes supported on A and on
/// its complement have dimensions summing to k and supports exactly A and
/// the complement.
EqualityWitness check_decomposition(const LinearCode& code, const std::vector<int>& subset);

/// Partition of the columns into two independent k-sets (n = 2k), first
/// in lexicographic order of the part containing column 0.
std::optional<std::pair<std::vector<int>, std::vector<int>>> find_two_disjoint_bases(const LinearCode& code);

}  // namespace codezeta

#endif  // CODEZETA_MATROID_HPP
