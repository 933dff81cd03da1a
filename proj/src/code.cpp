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

#include "codezeta/code.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "codezeta/enumerator.hpp"
#include "codezeta/error.hpp"
#include "codezeta/parallel.hpp"

namespace codezeta {

RowEchelon rref_rank(const Field& field, Matrix m) {
  RowEchelon out;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    const Element inv = field.inv(m[r][c]);
    for (auto& v : m[r]) v = field.mul(v, inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Element f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = field.sub(m[i][j], field.mul(f, m[r][j]));
    }
    out.pivots.push_back(static_cast<int>(c));
    ++r;
  }
  out.rank = static_cast<int>(r);
  out.reduced = std::move(m);
  return out;
}

LinearCode::LinearCode(Field field, Matrix generator)
    : field_(std::move(field)), n_(0), k_(static_cast<int>(generator.size())), generator_(std::move(generator)) {
  if (k_ < 1) fail(ErrorKind::validation, "generator matrix has no rows");
  n_ = static_cast<int>(generator_[0].size());
  if (n_ < k_) fail(ErrorKind::validation, "dimension exceeds length");
  for (const auto& row : generator_) {
    if (static_cast<int>(row.size()) != n_) fail(ErrorKind::validation, "ragged generator matrix");
    for (Element e : row) {
      if (e >= field_.size()) fail(ErrorKind::validation, "symbol " + std::to_string(e) + " outside [0, q)");
    }
  }
  const int rank = rref_rank(field_, generator_).rank;
  if (rank < k_) {
    fail(ErrorKind::validation,
         "generator rank " + std::to_string(rank) + " is less than k = " + std::to_string(k_));
  }
}

Row LinearCode::column(int j) const {
  Row col(static_cast<std::size_t>(k_));
  for (int i = 0; i < k_; ++i) col[static_cast<std::size_t>(i)] = generator_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return col;
}

namespace {

std::vector<long> parse_ints(const std::string& line, int line_no) {
  std::istringstream is(line);
  std::vector<long> out;
  std::string tok;
  while (is >> tok) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) {
      fail(ErrorKind::parse, "line " + std::to_string(line_no) + ": not an integer: '" + tok + "'");
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace

LinearCode parse_code(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  int line_no = 0;
  std::vector<std::pair<int, std::vector<long>>> content;
  while (std::getline(is, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    content.emplace_back(line_no, parse_ints(line, line_no));
  }
  if (content.empty()) fail(ErrorKind::parse, "empty code file");
  const auto& header = content.front().second;
  if (header.size() != 3) fail(ErrorKind::parse, "header must be 'q n k'");
  const long q = header[0];
  const long n = header[1];
  const long k = header[2];
  if (n < 1 || k < 1 || k > n) fail(ErrorKind::parse, "header requires 1 <= k <= n");
  if (static_cast<long>(content.size()) - 1 != k) {
    fail(ErrorKind::parse, "expected " + std::to_string(k) + " generator rows, found " +
                               std::to_string(content.size() - 1));
  }
  if (q < 0 || q > 255) fail(ErrorKind::unsupported_field, "unsupported field size " + std::to_string(q));
  Field field(static_cast<int>(q));
  Matrix g;
  for (std::size_t r = 1; r < content.size(); ++r) {
    const auto& [ln, vals] = content[r];
    if (static_cast<long>(vals.size()) != n) {
      fail(ErrorKind::parse, "line " + std::to_string(ln) + ": expected " + std::to_string(n) + " symbols");
    }
    Row row;
    for (long v : vals) {
      if (v < 0 || v >= q) {
        fail(ErrorKind::validation, "line " + std::to_string(ln) + ": symbol " + std::to_string(v) + " outside [0, q)");
      }
      row.push_back(static_cast<Element>(v));
    }
    g.push_back(std::move(row));
  }
  return LinearCode(std::move(field), std::move(g));
}

LinearCode load_code(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::parse, "cannot open code file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_code(ss.str());
}

std::string format_code(const LinearCode& code) {
  std::ostringstream os;
  os << code.q() << ' ' << code.length() << ' ' << code.dimension() << '\n';
  for (const auto& row : code.generator()) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << static_cast<int>(row[j]);
    os << '\n';
  }
  return os.str();
}

LinearCode dual_code(const LinearCode& code) {
  const Field& f = code.field();
  const int n = code.length();
  if (code.dimension() == n) fail(ErrorKind::domain, "dual of a full-space code is the zero code");
  const RowEchelon e = rref_rank(f, code.generator());
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  Matrix h;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Row v(static_cast<std::size_t>(n), 0);
    v[static_cast<std::size_t>(free)] = 1;
    for (int i = 0; i < e.rank; ++i) {
      v[static_cast<std::size_t>(e.pivots[static_cast<std::size_t>(i)])] =
          f.neg(e.reduced[static_cast<std::size_t>(i)][static_cast<std::size_t>(free)]);
    }
    h.push_back(std::move(v));
  }
  return LinearCode(f, std::move(h));
}

bool same_row_space(const LinearCode& a, const LinearCode& b) {
  if (!(a.field() == b.field()) || a.length() != b.length() || a.dimension() != b.dimension()) return false;
  return rref_rank(a.field(), a.generator()).reduced == rref_rank(b.field(), b.generator()).reduced;
}

Integer WeightDistribution::total() const {
  Integer t = 0;
  for (const auto& c : counts) t += c;
  return t;
}

int minimum_distance(std::span<const Integer> counts) {
  for (std::size_t i = 1; i < counts.size(); ++i) {
    if (counts[i] != 0) return static_cast<int>(i);
  }
  return static_cast<int>(counts.size());
}

std::vector<Integer> enumerate_weights(const LinearCode& code) {
  const Field& f = code.field();
  const int q = f.size();
  const int n = code.length();
  const int k = code.dimension();
  if (k * std::log2(static_cast<double>(q)) > kEnumerationLog2Cap + 1e-9) {
    fail(ErrorKind::capacity, "enumeration of " + std::to_string(q) + "^" + std::to_string(k) +
                                  " codewords exceeds the 2^" + std::to_string(kEnumerationLog2Cap) + " cap");
  }
  std::uint64_t total = 1;
  for (int i = 0; i < k; ++i) total *= static_cast<std::uint64_t>(q);

  // scaled[i][v] = v * row_i
  std::vector<std::vector<Row>> scaled(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    for (int v = 0; v < q; ++v) {
      Row r(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j) {
        r[static_cast<std::size_t>(j)] = f.mul(static_cast<Element>(v), code.generator()[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      }
      scaled[static_cast<std::size_t>(i)].push_back(std::move(r));
    }
  }

  const unsigned chunks = total < 4096 ? 1U : worker_count();
  std::vector<std::vector<std::uint64_t>> partial(chunks, std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0));
  parallel_chunks(total, chunks, [&](unsigned chunk, std::uint64_t begin, std::uint64_t end) {
    if (begin >= end) return;
    auto& hist = partial[chunk];
    // Message digits, least significant first (row 0).
    std::vector<int> digit(static_cast<std::size_t>(k));
    std::uint64_t idx = begin;
    for (int i = 0; i < k; ++i) {
      digit[static_cast<std::size_t>(i)] = static_cast<int>(idx % static_cast<std::uint64_t>(q));
      idx /= static_cast<std::uint64_t>(q);
    }
    Row word(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < k; ++i) {
      const Row& s = scaled[static_cast<std::size_t>(i)][static_cast<std::size_t>(digit[static_cast<std::size_t>(i)])];
      for (int j = 0; j < n; ++j) word[static_cast<std::size_t>(j)] = f.add(word[static_cast<std::size_t>(j)], s[static_cast<std::size_t>(j)]);
    }
    for (std::uint64_t m = begin; m < end; ++m) {
      int w = 0;
      for (Element e : word) w += (e != 0);
      ++hist[static_cast<std::size_t>(w)];
      // Advance the base-q counter, patching the word per changed digit.
      for (int i = 0; i < k; ++i) {
        auto& dg = digit[static_cast<std::size_t>(i)];
        const Row& old_row = scaled[static_cast<std::size_t>(i)][static_cast<std::size_t>(dg)];
        dg = (dg + 1) % q;
        const Row& new_row = scaled[static_cast<std::size_t>(i)][static_cast<std::size_t>(dg)];
        for (int j = 0; j < n; ++j) {
          auto& e = word[static_cast<std::size_t>(j)];
          e = f.add(f.sub(e, old_row[static_cast<std::size_t>(j)]), new_row[static_cast<std::size_t>(j)]);
        }
        if (dg != 0) break;
      }
    }
  });
  std::vector<Integer> counts(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& hist : partial) {
    for (std::size_t w = 0; w < hist.size(); ++w) counts[w] += Integer(static_cast<unsigned long>(hist[w]));
  }
  return counts;
}

WeightDistribution weight_distribution(const LinearCode& code) {
  const int n = code.length();
  const int k = code.dimension();
  const int smaller = std::min(k, n - k);
  if (smaller * std::log2(static_cast<double>(code.q())) > kEnumerationLog2Cap + 1e-9) {
    fail(ErrorKind::capacity, "min(k, n-k) * log2(q) exceeds " + std::to_string(kEnumerationLog2Cap));
  }
  WeightDistribution primal{code.q(), n, k, {}, 0, 0};
  WeightDistribution dual{code.q(), n, n - k, {}, 0, 0};
  if (k <= n - k) {
    primal.counts = enumerate_weights(code);
    dual = macwilliams(primal);
  } else {
    if (k == n) {
      dual.counts.assign(static_cast<std::size_t>(n) + 1, 0);
      dual.counts[0] = 1;
    } else {
      dual.counts = enumerate_weights(dual_code(code));
    }
    primal = macwilliams(dual);
  }
  primal.d = minimum_distance(primal.counts);
  primal.d_dual = minimum_distance(dual.counts);
  return primal;
}

int subset_rank(const LinearCode& code, std::span<const int> columns) {
  if (columns.empty()) return 0;
  Matrix sub(static_cast<std::size_t>(code.dimension()));
  for (int i = 0; i < code.dimension(); ++i) {
    for (int c : columns) {
      if (c < 0 || c >= code.length()) fail(ErrorKind::domain, "column index out of range");
      sub[static_cast<std::size_t>(i)].push_back(code.generator()[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]);
    }
  }
  return rref_rank(code.field(), std::move(sub)).rank;
}

LinearCode make_mds_code(int q, int n, int k) {
  Field f(q);
  if (n > q) fail(ErrorKind::domain, "MDS evaluation code needs n <= q distinct points");
  if (k < 1 || k > n) fail(ErrorKind::domain, "MDS evaluation code needs 1 <= k <= n");
  Matrix g(static_cast<std::size_t>(k), Row(static_cast<std::size_t>(n)));
  for (int j = 0; j < n; ++j) {
    Element power = 1;
    for (int i = 0; i < k; ++i) {
      g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = power;
      power = f.mul(power, static_cast<Element>(j));
    }
  }
  return LinearCode(std::move(f), std::move(g));
}

}  // namespace codezeta
