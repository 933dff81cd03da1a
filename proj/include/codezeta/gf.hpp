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

#ifndef CODEZETA_GF_HPP
#define CODEZETA_GF_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace codezeta {

/// Field element encoded as the integer sum c_i p^i of its polynomial
/// representative sum c_i x^i, in [0, q).
using Element = std::uint8_t;

enum class FieldOp { add, mul, neg, inv };

/// Table-driven GF(q) for q in {2,3,4,5,7,8,9}. Extension fields use the
/// fixed moduli x^2+x+1 (q=4), x^3+x+1 (q=8) and x^2+1 (q=9).
class Field {
 public:
  /// Throws Error(unsupported_field) for any other q.
  explicit Field(int q);

  int size() const noexcept { return q_; }
  int characteristic() const noexcept { return p_; }
  int degree() const noexcept { return m_; }

  Element add(Element a, Element b) const noexcept { return add_[index(a, b)]; }
  Element sub(Element a, Element b) const noexcept { return add_[index(a, neg_[b])]; }
  Element mul(Element a, Element b) const noexcept { return mul_[index(a, b)]; }
  Element neg(Element a) const noexcept { return neg_[a]; }
  /// Throws Error(division_by_zero) for a = 0.
  Element inv(Element a) const;

  bool operator==(const Field& o) const noexcept { return q_ == o.q_; }

 private:
  std::size_t index(Element a, Element b) const noexcept {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(q_) + b;
  }
  void verify_axioms() const;

  int q_;
  int p_;
  int m_;
  std::vector<Element> add_;
  std::vector<Element> mul_;
  std::vector<Element> neg_;
  std::vector<Element> inv_;
};

/// One table lookup; `b` is required for add and mul.
Element field_arith(const Field& field, FieldOp op, Element a, std::optional<Element> b = std::nullopt);

}  // namespace codezeta

#endif  // CODEZETA_GF_HPP
