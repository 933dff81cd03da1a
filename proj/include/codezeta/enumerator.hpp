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

// Weight-enumerator algebra: the MacWilliams transform, normalized
// enumerators a(t), and the coordinate-averaged puncture/shorten operators.

#ifndef CODEZETA_ENUMERATOR_HPP
#define CODEZETA_ENUMERATOR_HPP

#include <vector>

#include "codezeta/code.hpp"
#include "codezeta/exactmath.hpp"

namespace codezeta {

/// K_j(i) = sum_s (-1)^s (q-1)^(j-s) C(i,s) C(n-i,j-s).
Integer krawtchouk(int q, int n, int j, int i);

/// Dual distribution (1/|C|) A(x+(q-1)y, x-y). Throws
/// Error(invalid_distribution) if the total is not a power of q or any
/// transformed count is negative or non-integral.
WeightDistribution macwilliams(const WeightDistribution& a);

/// Unchecked rational transform, for rational-valued enumerators.
std::vector<Rational> macwilliams_rational(int q, std::span<const Rational> counts, const Rational& size);

/// A weight distribution whose entries may be non-integral, as produced by
/// the averaged puncture and shorten operators.
struct RationalDistribution {
  int q = 0;
  int n = 0;
  std::vector<Rational> counts;

  static RationalDistribution from(const WeightDistribution& a);
  Rational total() const;
  /// Smallest positive index with a nonzero entry; n + 1 when none.
  int min_weight() const;
  BiPoly homogeneous() const;
};

/// (1/n)(d/dx + d/dy) applied to A(x,y).
RationalDistribution puncture_avg(const RationalDistribution& a);
/// (1/n) d/dx applied to A(x,y).
RationalDistribution shorten_avg(const RationalDistribution& a);

struct NormalizedEnumerator {
  int q = 0;
  int n = 0;
  int d = 0;
  /// a_w = A_w / C(n, w), w = 0..n.
  std::vector<Rational> a_list;
  /// (1/(q-1)) (a_d + a_{d+1} t + ... + a_n t^(n-d)).
  UniPoly a_poly;
};

NormalizedEnumerator normalize(const WeightDistribution& a);
/// d is read off as the smallest positive index with a nonzero entry.
NormalizedEnumerator normalize(const RationalDistribution& a);

/// a(t)(1+t)^d mod t^(n-d+1): unchanged by averaged puncturing and
/// shortening (compare on the common truncation).
TruncatedSeries truncation_invariant(const NormalizedEnumerator& a);

/// A(x,y) = sum A_i x^(n-i) y^i.
BiPoly homogeneous_enumerator(const WeightDistribution& a);

}  // namespace codezeta

#endif  // CODEZETA_ENUMERATOR_HPP
