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

// Linear codes over GF(q): parsing, row reduction, duals, weight
// distributions and column-subset ranks.
//
// Code file format (whitespace separated, '#' starts a comment line, blank
// lines ignored):
//
//   q n k
//   g_11 ... g_1n
//   ...
//   g_k1 ... g_kn
//
// Symbols are field elements in the integer encoding of gf.hpp.

#ifndef CODEZETA_CODE_HPP
#define CODEZETA_CODE_HPP

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "codezeta/exactmath.hpp"
#include "codezeta/gf.hpp"

namespace codezeta {

using Row = std::vector<Element>;
using Matrix = std::vector<Row>;

struct RowEchelon {
  int rank = 0;
  Matrix reduced;
  std::vector<int> pivots;
};

/// Reduced row echelon form over GF(q), pivots normalized to 1.
RowEchelon rref_rank(const Field& field, Matrix matrix);

class LinearCode {
 public:
  /// Throws Error(validation) unless the generator has full row rank
  /// 1 <= k <= n and all symbols lie in [0, q).
  LinearCode(Field field, Matrix generator);

  const Field& field() const noexcept { return field_; }
  int q() const noexcept { return field_.size(); }
  int length() const noexcept { return n_; }
  int dimension() const noexcept { return k_; }
  const Matrix& generator() const noexcept { return generator_; }
  Row column(int j) const;

 private:
  Field field_;
  int n_;
  int k_;
  Matrix generator_;
};

/// Throws Error(parse) for a malformed header or row, Error(validation)
/// for out-of-range symbols or rank < k.
LinearCode parse_code(std::string_view text);
LinearCode load_code(const std::string& path);
std::string format_code(const LinearCode& code);

/// Generator of the null space: G * H^T = 0. The zero code (k = n) has
/// no LinearCode representation and throws Error(domain).
LinearCode dual_code(const LinearCode& code);
bool same_row_space(const LinearCode& a, const LinearCode& b);

struct WeightDistribution {
  int q = 0;
  int n = 0;
  int k = 0;
  std::vector<Integer> counts;
  /// min{i > 0 : A_i != 0}; n + 1 when there is no nonzero word.
  int d = 0;
  /// Minimum distance of the dual; n + 1 for a zero dual.
  int d_dual = 0;

  Integer total() const;
  bool operator==(const WeightDistribution&) const = default;
};

/// Smallest i > 0 with a nonzero entry, or counts.size() when none.
int minimum_distance(std::span<const Integer> counts);

/// Upper limit on log2 of the number of enumerated words.
inline constexpr int kEnumerationLog2Cap = 28;

/// Counts by direct enumeration of all q^k codewords; throws
/// Error(capacity) past the cap.
std::vector<Integer> enumerate_weights(const LinearCode& code);

/// Enumerates whichever of C, C-perp is smaller and transforms the other;
/// fills d and d_dual.
WeightDistribution weight_distribution(const LinearCode& code);

/// Rank of the generator columns indexed (0-based) by `columns`.
int subset_rank(const LinearCode& code, std::span<const int> columns);

/// Evaluation code of polynomials of degree < k at the first n field
/// elements; MDS with d = n - k + 1. Requires n <= q.
LinearCode make_mds_code(int q, int n, int k);

}  // namespace codezeta

#endif  // CODEZETA_CODE_HPP
