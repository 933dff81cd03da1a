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

// Independent oracles and code generators shared by the unit and
// acceptance tests. Nothing here calls the enumeration or rank-profile
// code paths it is used to check.

#ifndef CODEZETA_TESTS_SUPPORT_HPP
#define CODEZETA_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "codezeta/code.hpp"
#include "codezeta/exactmath.hpp"
#include "codezeta/gf.hpp"

namespace codezeta::testing {

inline std::string fixture(const std::string& name) { return std::string(CODEZETA_FIXTURE_DIR) + "/" + name; }

inline std::vector<Integer> ints(std::initializer_list<long> xs) {
  std::vector<Integer> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

inline Rational frac(long num, long den) { return fraction(num, den); }

/// Every codeword as a row, by running over all q^k messages.
inline std::vector<Row> all_codewords(const LinearCode& code) {
  const Field& f = code.field();
  const int n = code.length();
  const int k = code.dimension();
  std::vector<Row> words;
  std::vector<int> msg(static_cast<std::size_t>(k), 0);
  while (true) {
    Row w(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < n; ++j) {
        w[j] = f.add(w[j], f.mul(static_cast<Element>(msg[i]), code.generator()[i][j]));
      }
    }
    words.push_back(std::move(w));
    int pos = 0;
    while (pos < k && ++msg[pos] == code.q()) msg[pos++] = 0;
    if (pos == k) break;
  }
  return words;
}

inline int weight(const Row& w) {
  int c = 0;
  for (Element e : w) c += e != 0;
  return c;
}

inline std::vector<Integer> brute_weights(const LinearCode& code) {
  std::vector<Integer> counts(static_cast<std::size_t>(code.length()) + 1, 0);
  for (const Row& w : all_codewords(code)) counts[weight(w)] += 1;
  return counts;
}

/// Rank over GF(q) of a set of column vectors by plain elimination.
inline int column_rank(const LinearCode& code, std::uint32_t mask) {
  const Field& f = code.field();
  std::vector<Row> vecs;
  for (int j = 0; j < code.length(); ++j) {
    if (mask >> j & 1u) vecs.push_back(code.column(j));
  }
  int rank = 0;
  const int k = code.dimension();
  for (int row = 0; row < k && rank < static_cast<int>(vecs.size()); ++row) {
    std::size_t piv = rank;
    while (piv < vecs.size() && vecs[piv][row] == 0) ++piv;
    if (piv == vecs.size()) continue;
    std::swap(vecs[piv], vecs[rank]);
    const Element inv = f.inv(vecs[rank][row]);
    for (std::size_t o = 0; o < vecs.size(); ++o) {
      if (o == static_cast<std::size_t>(rank) || vecs[o][row] == 0) continue;
      const Element factor = f.mul(vecs[o][row], inv);
      for (int t = 0; t < k; ++t) vecs[o][t] = f.sub(vecs[o][t], f.mul(factor, vecs[rank][t]));
    }
    ++rank;
  }
  return rank;
}

/// W_n from the rank function directly, with r(A) supplied by `rank`.
template <class RankFn>
BiPoly normalized_rank_gen_oracle(int n, int k, RankFn rank) {
  BiPoly out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    const int r = rank(mask);
    out.add_term(Rational(1) / Rational(binomial(n, size)), k - r, size - r);
  }
  return out;
}

inline Matrix random_matrix(std::mt19937_64& rng, int q, int rows, int cols) {
  std::uniform_int_distribution<int> sym(0, q - 1);
  Matrix m(static_cast<std::size_t>(rows), Row(static_cast<std::size_t>(cols)));
  for (auto& row : m) {
    for (auto& e : row) e = static_cast<Element>(sym(rng));
  }
  return m;
}

/// Full-rank code of the given shape with no identically zero coordinate.
inline LinearCode random_code(std::mt19937_64& rng, int q, int n, int k) {
  const Field f(q);
  while (true) {
    Matrix g = random_matrix(rng, q, k, n);
    if (rref_rank(f, g).rank != k) continue;
    bool zero_column = false;
    for (int j = 0; j < n && !zero_column; ++j) {
      bool all_zero = true;
      for (int i = 0; i < k; ++i) all_zero = all_zero && g[i][j] == 0;
      zero_column = all_zero;
    }
    if (!zero_column) return LinearCode(f, std::move(g));
  }
}

/// Reproducible random corpus: q in {2,3,4}, 3 <= n <= 12, 1 <= k < n,
/// every coordinate used.
inline std::vector<LinearCode> random_corpus(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int qs[] = {2, 3, 4};
  std::vector<LinearCode> out;
  while (static_cast<int>(out.size()) < count) {
    const int q = qs[rng() % 3];
    const int n = 3 + static_cast<int>(rng() % 10);
    const int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
    out.push_back(random_code(rng, q, n, k));
  }
  return out;
}

/// Like random_corpus, keeping only codes with d >= 2 and d_dual >= 2.
inline std::vector<LinearCode> nondegenerate_corpus(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int qs[] = {2, 3, 4};
  std::vector<LinearCode> out;
  while (static_cast<int>(out.size()) < count) {
    const int q = qs[rng() % 3];
    const int n = 3 + static_cast<int>(rng() % 10);
    const int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
    LinearCode c = random_code(rng, q, n, k);
    const auto counts = brute_weights(c);
    if (counts[1] == 0) out.push_back(std::move(c));
  }
  return out;
}

/// Binary self-dual code of even length n, grown one random even-weight,
/// self-orthogonal vector at a time.
inline LinearCode random_binary_self_dual(std::mt19937_64& rng, int n) {
  const Field f(2);
  Matrix rows;
  while (static_cast<int>(rows.size()) < n / 2) {
    Row v = random_matrix(rng, 2, 1, n)[0];
    if (weight(v) % 2 != 0) continue;
    bool orthogonal = true;
    for (const Row& r : rows) {
      int dot = 0;
      for (int j = 0; j < n; ++j) dot ^= r[j] & v[j];
      orthogonal = orthogonal && dot == 0;
    }
    if (!orthogonal) continue;
    Matrix trial = rows;
    trial.push_back(v);
    if (rref_rank(f, trial).rank == static_cast<int>(trial.size())) rows = std::move(trial);
  }
  return LinearCode(f, std::move(rows));
}

/// Weight counts of all codewords with coordinate j deleted, summed over j
/// and divided by n.
inline std::vector<Rational> concrete_puncture_average(const LinearCode& code) {
  const int n = code.length();
  std::vector<Rational> out(static_cast<std::size_t>(n));
  for (const Row& w : all_codewords(code)) {
    const int wt = weight(w);
    for (int j = 0; j < n; ++j) out[wt - (w[j] != 0)] += fraction(1, n);
  }
  return out;
}

/// Same, restricted to codewords vanishing at the deleted coordinate.
inline std::vector<Rational> concrete_shorten_average(const LinearCode& code) {
  const int n = code.length();
  std::vector<Rational> out(static_cast<std::size_t>(n));
  for (const Row& w : all_codewords(code)) {
    for (int j = 0; j < n; ++j) {
      if (w[j] == 0) out[weight(w)] += fraction(1, n);
    }
  }
  return out;
}

}  // namespace codezeta::testing

#endif  // CODEZETA_TESTS_SUPPORT_HPP
