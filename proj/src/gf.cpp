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

#include "codezeta/gf.hpp"

#include <string>

#include "codezeta/error.hpp"

namespace codezeta {

namespace {

struct FieldShape {
  int p;
  int m;
  // Low-order coefficients of the monic modulus x^m + ... (m entries).
  std::vector<int> modulus;
};

std::optional<FieldShape> shape_for(int q) {
  switch (q) {
    case 2: return FieldShape{2, 1, {}};
    case 3: return FieldShape{3, 1, {}};
    case 5: return FieldShape{5, 1, {}};
    case 7: return FieldShape{7, 1, {}};
    case 4: return FieldShape{2, 2, {1, 1}};     // x^2 + x + 1
    case 8: return FieldShape{2, 3, {1, 1, 0}};  // x^3 + x + 1
    case 9: return FieldShape{3, 2, {1, 0}};     // x^2 + 1
    default: return std::nullopt;
  }
}

std::vector<int> digits(int value, int p, int m) {
  std::vector<int> d(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    d[static_cast<std::size_t>(i)] = value % p;
    value /= p;
  }
  return d;
}

int undigits(const std::vector<int>& d, int p) {
  int v = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) v = v * p + *it;
  return v;
}

}  // namespace

Field::Field(int q) : q_(q) {
  const auto shape = shape_for(q);
  if (!shape) {
    fail(ErrorKind::unsupported_field,
         "unsupported field size " + std::to_string(q) + "; supported q: 2, 3, 4, 5, 7, 8, 9");
  }
  p_ = shape->p;
  m_ = shape->m;
  const auto sq = static_cast<std::size_t>(q) * static_cast<std::size_t>(q);
  add_.resize(sq);
  mul_.resize(sq);
  neg_.resize(static_cast<std::size_t>(q));
  inv_.assign(static_cast<std::size_t>(q), 0);

  for (int a = 0; a < q; ++a) {
    const auto da = digits(a, p_, m_);
    for (int b = 0; b < q; ++b) {
      const auto db = digits(b, p_, m_);
      std::vector<int> sum(static_cast<std::size_t>(m_));
      for (int i = 0; i < m_; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        sum[ui] = (da[ui] + db[ui]) % p_;
      }
      // Schoolbook product, then reduce by the modulus from the top down.
      std::vector<int> prod(static_cast<std::size_t>(2 * m_ - 1));
      for (int i = 0; i < m_; ++i) {
        for (int j = 0; j < m_; ++j) {
          auto& slot = prod[static_cast<std::size_t>(i + j)];
          slot = (slot + da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) % p_;
        }
      }
      for (int top = 2 * m_ - 2; top >= m_; --top) {
        const int c = prod[static_cast<std::size_t>(top)];
        if (c == 0) continue;
        prod[static_cast<std::size_t>(top)] = 0;
        for (int i = 0; i < m_; ++i) {
          auto& slot = prod[static_cast<std::size_t>(top - m_ + i)];
          slot = ((slot - c * shape->modulus[static_cast<std::size_t>(i)]) % p_ + p_) % p_;
        }
      }
      prod.resize(static_cast<std::size_t>(m_));
      add_[index(static_cast<Element>(a), static_cast<Element>(b))] = static_cast<Element>(undigits(sum, p_));
      mul_[index(static_cast<Element>(a), static_cast<Element>(b))] = static_cast<Element>(undigits(prod, p_));
    }
  }
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      const auto ea = static_cast<Element>(a);
      const auto eb = static_cast<Element>(b);
      if (add_[index(ea, eb)] == 0) neg_[ea] = eb;
      if (mul_[index(ea, eb)] == 1) inv_[ea] = eb;
    }
  }
  verify_axioms();
}

void Field::verify_axioms() const {
  for (int a = 0; a < q_; ++a) {
    const auto ea = static_cast<Element>(a);
    if (add(ea, 0) != ea || mul(ea, 1) != ea) fail(ErrorKind::validation, "field identity check failed");
    if (a != 0 && mul(ea, inv_[ea]) != 1) fail(ErrorKind::validation, "field inverse check failed");
    for (int b = 0; b < q_; ++b) {
      const auto eb = static_cast<Element>(b);
      if (add(ea, eb) != add(eb, ea) || mul(ea, eb) != mul(eb, ea)) {
        fail(ErrorKind::validation, "field commutativity check failed");
      }
      for (int c = 0; c < q_; ++c) {
        const auto ec = static_cast<Element>(c);
        if (add(add(ea, eb), ec) != add(ea, add(eb, ec)) || mul(mul(ea, eb), ec) != mul(ea, mul(eb, ec)) ||
            mul(ea, add(eb, ec)) != add(mul(ea, eb), mul(ea, ec))) {
          fail(ErrorKind::validation, "field associativity/distributivity check failed");
        }
      }
    }
  }
}

Element Field::inv(Element a) const {
  if (a == 0) fail(ErrorKind::division_by_zero, "inverse of zero field element");
  return inv_[a];
}

Element field_arith(const Field& field, FieldOp op, Element a, std::optional<Element> b) {
  const auto check = [&](Element e) {
    if (e >= field.size()) fail(ErrorKind::domain, "field element out of range");
  };
  check(a);
  switch (op) {
    case FieldOp::neg: return field.neg(a);
    case FieldOp::inv: return field.inv(a);
    case FieldOp::add:
    case FieldOp::mul:
      if (!b) fail(ErrorKind::domain, "binary field operation needs two operands");
      check(*b);
      return op == FieldOp::add ? field.add(a, *b) : field.mul(a, *b);
  }
  return 0;
}

}  // namespace codezeta
