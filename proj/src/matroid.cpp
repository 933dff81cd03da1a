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

#include "codezeta/matroid.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <random>

#include "codezeta/enumerator.hpp"
#include "codezeta/error.hpp"
#include "codezeta/parallel.hpp"

namespace codezeta {

namespace {

// Echelon basis of a span in GF(q)^k, grown one vector at a time.
class IncrementalBasis {
 public:
  explicit IncrementalBasis(const Field& f) : f_(&f) {}

  int rank() const noexcept { return static_cast<int>(rows_.size()); }

  /// Adds v if independent; returns whether the rank grew.
  bool insert(Row v) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Element c = v[static_cast<std::size_t>(pivots_[i])];
      if (c == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = f_->sub(v[j], f_->mul(c, rows_[i][j]));
    }
    const auto it = std::find_if(v.begin(), v.end(), [](Element e) { return e != 0; });
    if (it == v.end()) return false;
    const Element inv = f_->inv(*it);
    for (auto& e : v) e = f_->mul(e, inv);
    pivots_.push_back(static_cast<int>(it - v.begin()));
    rows_.push_back(std::move(v));
    return true;
  }

 private:
  const Field* f_;
  std::vector<Row> rows_;
  std::vector<int> pivots_;
};

void check_subset_capacity(int n) {
  if (n > kSubsetLengthCap) {
    fail(ErrorKind::capacity, "subset enumeration needs n <= " + std::to_string(kSubsetLengthCap));
  }
}

// Visits subsets of columns [0, top) in increasing mask order (the
// highest column is decided first, excluded before included).
void walk(const std::vector<Row>& columns, int top, std::uint32_t mask, int size, const IncrementalBasis& basis,
          const std::function<void(std::uint32_t, int, int)>& visit) {
  if (top == 0) {
    visit(mask, size, basis.rank());
    return;
  }
  const int col = top - 1;
  walk(columns, col, mask, size, basis, visit);
  IncrementalBasis grown = basis;
  grown.insert(columns[static_cast<std::size_t>(col)]);
  walk(columns, col, mask | (1U << col), size + 1, grown, visit);
}

std::vector<Row> all_columns(const LinearCode& code) {
  std::vector<Row> cols;
  for (int j = 0; j < code.length(); ++j) cols.push_back(code.column(j));
  return cols;
}

std::vector<int> mask_to_columns(std::uint32_t mask, int n) {
  std::vector<int> out;
  for (int j = 0; j < n; ++j) {
    if (mask & (1U << j)) out.push_back(j);
  }
  return out;
}

// Basis of {m : m * M = 0} for a k x c matrix M.
Matrix left_kernel(const Field& f, const Matrix& m, int k) {
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  Matrix transposed(cols, Row(static_cast<std::size_t>(k)));
  for (int i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < cols; ++j) transposed[j][static_cast<std::size_t>(i)] = m[static_cast<std::size_t>(i)][j];
  }
  const RowEchelon e = rref_rank(f, transposed);
  std::vector<bool> is_pivot(static_cast<std::size_t>(k), false);
  for (int p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  Matrix basis;
  for (int free = 0; free < k; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Row v(static_cast<std::size_t>(k), 0);
    v[static_cast<std::size_t>(free)] = 1;
    for (int i = 0; i < e.rank; ++i) {
      v[static_cast<std::size_t>(e.pivots[static_cast<std::size_t>(i)])] =
          f.neg(e.reduced[static_cast<std::size_t>(i)][static_cast<std::size_t>(free)]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix select_columns(const LinearCode& code, const std::vector<int>& cols) {
  Matrix out(static_cast<std::size_t>(code.dimension()));
  for (int i = 0; i < code.dimension(); ++i) {
    for (int c : cols) out[static_cast<std::size_t>(i)].push_back(code.generator()[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]);
  }
  return out;
}

// Support (as a column set) of the subcode vanishing on `zero_cols`.
std::pair<int, std::vector<int>> vanishing_subcode(const LinearCode& code, const std::vector<int>& zero_cols) {
  const Field& f = code.field();
  const int k = code.dimension();
  Matrix kernel = zero_cols.empty() ? Matrix{} : left_kernel(f, select_columns(code, zero_cols), k);
  if (zero_cols.empty()) {
    for (int i = 0; i < k; ++i) {
      Row e(static_cast<std::size_t>(k), 0);
      e[static_cast<std::size_t>(i)] = 1;
      kernel.push_back(std::move(e));
    }
  }
  std::vector<bool> in_support(static_cast<std::size_t>(code.length()), false);
  for (const auto& m : kernel) {
    for (int j = 0; j < code.length(); ++j) {
      Element acc = 0;
      for (int i = 0; i < k; ++i) {
        acc = f.add(acc, f.mul(m[static_cast<std::size_t>(i)], code.generator()[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
      }
      if (acc != 0) in_support[static_cast<std::size_t>(j)] = true;
    }
  }
  std::vector<int> support;
  for (int j = 0; j < code.length(); ++j) {
    if (in_support[static_cast<std::size_t>(j)]) support.push_back(j);
  }
  return {static_cast<int>(kernel.size()), support};
}

}  // namespace

RankProfile rank_profile(const LinearCode& code) {
  const int n = code.length();
  const int k = code.dimension();
  check_subset_capacity(n);
  const auto columns = all_columns(code);

  // Split on the top `split` columns; each prefix is an independent walk.
  const int split = std::min(n, 6);
  const std::uint64_t prefixes = 1ULL << split;
  const unsigned chunks = n < 12 ? 1U : std::min<unsigned>(worker_count(), static_cast<unsigned>(prefixes));
  std::vector<RankProfile> partial(chunks, RankProfile(static_cast<std::size_t>(n) + 1,
                                                       std::vector<std::uint64_t>(static_cast<std::size_t>(k) + 1, 0)));
  parallel_chunks(prefixes, chunks, [&](unsigned chunk, std::uint64_t begin, std::uint64_t end) {
    auto& prof = partial[chunk];
    for (std::uint64_t p = begin; p < end; ++p) {
      IncrementalBasis basis(code.field());
      int size = 0;
      std::uint32_t mask = 0;
      for (int b = 0; b < split; ++b) {
        if (p & (1ULL << b)) {
          const int col = n - split + b;
          basis.insert(columns[static_cast<std::size_t>(col)]);
          mask |= 1U << col;
          ++size;
        }
      }
      walk(columns, n - split, mask, size, basis, [&](std::uint32_t, int s, int r) {
        ++prof[static_cast<std::size_t>(s)][static_cast<std::size_t>(r)];
      });
    }
  });
  RankProfile out = partial[0];
  for (unsigned c = 1; c < chunks; ++c) {
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (std::size_t r = 0; r < out[i].size(); ++r) out[i][r] += partial[c][i][r];
    }
  }
  return out;
}

RankGenPoly rank_gen_poly(const RankProfile& profile, int n, int k) {
  RankGenPoly out{{}, n, k};
  for (int i = 0; i <= n; ++i) {
    for (int r = 0; r <= k; ++r) {
      const auto c = profile[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)];
      if (c != 0) out.W.add_term(Rational(Integer(static_cast<unsigned long>(c))), k - r, i - r);
    }
  }
  return out;
}

RankGenPoly rank_gen_poly(const LinearCode& code) {
  return rank_gen_poly(rank_profile(code), code.length(), code.dimension());
}

NormalizedRankGen normalized_rank_gen(const RankProfile& profile, int n, int k) {
  NormalizedRankGen out{{}, n, k};
  for (int i = 0; i <= n; ++i) {
    const Rational layer = Rational(1) / Rational(binomial(n, i));
    for (int r = 0; r <= k; ++r) {
      const auto c = profile[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)];
      if (c != 0) out.Wn.add_term(Rational(Integer(static_cast<unsigned long>(c))) * layer, k - r, i - r);
    }
  }
  return out;
}

NormalizedRankGen normalized_rank_gen(const LinearCode& code) {
  return normalized_rank_gen(rank_profile(code), code.length(), code.dimension());
}

RatFun wn_plus(const NormalizedRankGen& wn) {
  const BiPoly one_minus_x = BiPoly::constant(1) - BiPoly::monomial(1, 1, 0);
  const BiPoly one_minus_y = BiPoly::constant(1) - BiPoly::monomial(1, 0, 1);
  BiPoly num = wn.Wn * one_minus_x * one_minus_y;
  num += BiPoly::monomial(1, wn.k + 1, 0) * one_minus_y;
  num += BiPoly::monomial(1, 0, wn.n - wn.k + 1) * one_minus_x;
  return RatFun{std::move(num), one_minus_x * one_minus_y};
}

std::vector<Rational> greene_predict(const RankGenPoly& w, int q) {
  const int n = w.n;
  const int k = w.k;
  const BiPoly x_minus_y = BiPoly::monomial(1, 1, 0) - BiPoly::monomial(1, 0, 1);
  BiPoly total;
  for (const auto& [e, c] : w.W.terms()) {
    const int a = e.first;
    const int b = e.second;
    // c q^a y^(a-b+n-k) (x-y)^(k-a+b)
    if (a - b + n - k < 0 || k - a + b < 0) fail(ErrorKind::check_failed, "Greene substitution is not polynomial");
    total += (x_minus_y.pow(static_cast<unsigned>(k - a + b)) * (c * rpow(Rational(q), a))).shift(0, a - b + n - k);
  }
  std::vector<Rational> counts(static_cast<std::size_t>(n) + 1);
  for (const auto& [e, c] : total.terms()) {
    if (e.first + e.second != n) fail(ErrorKind::check_failed, "Greene substitution is not homogeneous of degree n");
    counts[static_cast<std::size_t>(e.second)] = c;
  }
  return counts;
}

bool check_greene(const WeightDistribution& a, const RankGenPoly& w) {
  if (a.n != w.n) return false;
  const auto predicted = greene_predict(w, a.q);
  for (int i = 0; i <= a.n; ++i) {
    if (predicted[static_cast<std::size_t>(i)] != Rational(a.counts[static_cast<std::size_t>(i)])) return false;
  }
  return true;
}

namespace {

std::vector<Rational> normalized_counts(const WeightDistribution& a) {
  std::vector<Rational> out;
  for (int i = 0; i <= a.n; ++i) {
    out.push_back(Rational(a.counts[static_cast<std::size_t>(i)]) / Rational(binomial(a.n, i)));
  }
  return out;
}

}  // namespace

bool check_greene_normalized(const WeightDistribution& a, const NormalizedRankGen& wn) {
  const int n = a.n;
  const int k = wn.k;
  const UniPoly one_plus_t{Rational(1), Rational(1)};
  const UniPoly lhs = UniPoly(normalized_counts(a)) * one_plus_t.pow(static_cast<unsigned>(n + 1));
  UniPoly rhs;
  for (const auto& [e, c] : wn.Wn.terms()) {
    const int a_exp = e.first;
    const int b_exp = e.second;
    // c q^a t^(a-b+n-k) (1+t)^(k-a+b)
    const int t_power = a_exp - b_exp + n - k;
    const int binom_power = k - a_exp + b_exp;
    if (t_power < 0 || binom_power < 0) {
      fail(ErrorKind::check_failed, "normalized Greene substitution leaves negative powers");
    }
    rhs += UniPoly::monomial(c * rpow(Rational(a.q), a_exp), t_power) *
           one_plus_t.pow(static_cast<unsigned>(binom_power));
  }
  for (int i = 0; i <= n; ++i) {
    if (lhs.coeff(i) != rhs.coeff(i)) return false;
  }
  return true;
}

bool check_greene_normalized_symmetric(const WeightDistribution& a, const NormalizedRankGen& wn) {
  const int n = a.n;
  const int k = wn.k;
  const auto an = normalized_counts(a);
  // Variables (s, t).
  const BiPoly s_plus_t = BiPoly::monomial(1, 1, 0) + BiPoly::monomial(1, 0, 1);
  BiPoly lhs;
  for (int i = 0; i <= n; ++i) lhs.add_term(an[static_cast<std::size_t>(i)], n - i, i);
  lhs *= s_plus_t.pow(static_cast<unsigned>(n + 1));
  BiPoly rhs;
  for (const auto& [e, c] : wn.Wn.terms()) {
    const int a_exp = e.first;
    const int b_exp = e.second;
    const int side_power = a_exp - b_exp + n - k;
    const int binom_power = k - a_exp + b_exp;
    if (side_power < 0 || binom_power < 0) return false;
    const BiPoly core = s_plus_t.pow(static_cast<unsigned>(binom_power)) * (c * rpow(Rational(a.q), a_exp));
    rhs += core.shift(n + 1, side_power);
    rhs += core.shift(side_power, n + 1);
  }
  return lhs == rhs;
}

NormalizedRankGen puncture_shorten_wn(const NormalizedRankGen& wn, CoordinateOp op) {
  NormalizedRankGen out = wn;
  out.n = wn.n - 1;
  if (op == CoordinateOp::puncture) {
    out.Wn -= BiPoly::monomial(1, 0, wn.n - wn.k);
  } else {
    out.Wn -= BiPoly::monomial(1, wn.k, 0);
    out.k = wn.k - 1;
  }
  return out;
}

// ---------------------------------------------------------------------------

const char* to_string(DualityClass c) noexcept {
  switch (c) {
    case DualityClass::self_dual: return "self-dual";
    case DualityClass::contains_dual: return "contains-dual";
    case DualityClass::formally_self_dual: return "formally-self-dual";
    case DualityClass::other: return "other";
  }
  return "other";
}

DualityClass classify_duality(const LinearCode& code) {
  const int n = code.length();
  const int k = code.dimension();
  if (k == n) return DualityClass::contains_dual;
  const LinearCode dual = dual_code(code);
  if (2 * k == n && same_row_space(code, dual)) return DualityClass::self_dual;
  Matrix stacked = code.generator();
  stacked.insert(stacked.end(), dual.generator().begin(), dual.generator().end());
  if (rref_rank(code.field(), stacked).rank == k) return DualityClass::contains_dual;
  if (2 * k == n) {
    const WeightDistribution wd = weight_distribution(code);
    if (macwilliams(wd).counts == wd.counts) return DualityClass::formally_self_dual;
  }
  return DualityClass::other;
}

bool CliffordReport::passes() const noexcept { return violations == 0 && failed_decompositions == 0; }

EqualityWitness check_decomposition(const LinearCode& code, const std::vector<int>& subset) {
  const int n = code.length();
  const int k = code.dimension();
  std::vector<int> complement;
  for (int j = 0; j < n; ++j) {
    if (!std::binary_search(subset.begin(), subset.end(), j)) complement.push_back(j);
  }
  EqualityWitness w;
  w.subset = subset;
  // Rank formula for the subcode dimensions.
  w.dim_on_subset = k - subset_rank(code, complement);
  w.dim_on_complement = k - subset_rank(code, subset);
  // Direct kernel computation of the same subcodes.
  const auto [kernel_on_subset, support_a] = vanishing_subcode(code, complement);
  const auto [kernel_on_complement, support_b] = vanishing_subcode(code, subset);
  w.decomposes = kernel_on_subset == w.dim_on_subset && kernel_on_complement == w.dim_on_complement &&
                 w.dim_on_subset + w.dim_on_complement == k && support_a == subset && support_b == complement;
  return w;
}

CliffordReport clifford_check(const LinearCode& code, const CliffordMode& mode) {
  const int n = code.length();
  CliffordReport report;
  report.duality = classify_duality(code);
  const bool self_dual = report.duality == DualityClass::self_dual;
  constexpr std::size_t kWitnessSamples = 16;
  const std::uint32_t full = n >= 32 ? 0xFFFFFFFFU : ((1U << n) - 1U);

  const auto visit = [&](std::uint32_t mask, int size, int rank) {
    ++report.visited;
    if (2 * rank < size) {
      if (report.violations++ == 0) report.first_violation = mask_to_columns(mask, n);
      return;
    }
    if (2 * rank == size && mask != 0 && mask != full) {
      ++report.equality_witnesses;
      if (self_dual) {
        EqualityWitness w = check_decomposition(code, mask_to_columns(mask, n));
        if (!w.decomposes) ++report.failed_decompositions;
        if (report.witness_samples.size() < kWitnessSamples) report.witness_samples.push_back(std::move(w));
      } else if (report.witness_samples.size() < kWitnessSamples) {
        EqualityWitness w;
        w.subset = mask_to_columns(mask, n);
        report.witness_samples.push_back(std::move(w));
      }
    }
  };

  if (mode.exhaustive) {
    check_subset_capacity(n);
    const auto columns = all_columns(code);
    walk(columns, n, 0, 0, IncrementalBasis(code.field()), visit);
  } else {
    if (n > 32) fail(ErrorKind::capacity, "sampling supports n <= 32");
    std::mt19937_64 rng(mode.seed);
    for (std::uint64_t s = 0; s < mode.samples; ++s) {
      const auto mask = static_cast<std::uint32_t>(rng()) & full;
      const auto cols = mask_to_columns(mask, n);
      visit(mask, static_cast<int>(cols.size()), subset_rank(code, cols));
    }
  }
  return report;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> find_two_disjoint_bases(const LinearCode& code) {
  const int n = code.length();
  const int k = code.dimension();
  if (n != 2 * k) return std::nullopt;
  if (n > 20) fail(ErrorKind::capacity, "two-basis search needs n <= 20");
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::vector<int> rest;
    for (int j = 0, p = 0; j < n; ++j) {
      if (p < k && pick[static_cast<std::size_t>(p)] == j) {
        ++p;
      } else {
        rest.push_back(j);
      }
    }
    if (subset_rank(code, pick) == k && subset_rank(code, rest) == k) return std::make_pair(pick, rest);
    // Next k-subset in lexicographic order.
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return std::nullopt;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace codezeta
