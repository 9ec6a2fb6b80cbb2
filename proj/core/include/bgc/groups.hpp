// Copyright 2026 The bgclean Authors
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

#ifndef BGC_GROUPS_HPP_
#define BGC_GROUPS_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bgc/rational.hpp"

namespace bgc {

// Square matrix over exact rationals, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(int dim);
  RationalMatrix(int dim, std::vector<Rational> row_major);

  static RationalMatrix identity(int dim);

  int dim() const { return dim_; }
  const Rational& at(int row, int col) const {
    return entries_[static_cast<std::size_t>(row * dim_ + col)];
  }
  Rational& at(int row, int col) {
    return entries_[static_cast<std::size_t>(row * dim_ + col)];
  }
  const std::vector<Rational>& entries() const { return entries_; }

  RationalMatrix operator*(const RationalMatrix& rhs) const;

  // Gauss-Jordan elimination; nullopt if singular.
  std::optional<RationalMatrix> inverse() const;
  bool is_identity() const;

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

 private:
  int dim_ = 0;
  std::vector<Rational> entries_;
};

// Z_m under addition.
class CyclicGroup {
 public:
  using Element = long;

  explicit CyclicGroup(long modulus);

  long modulus() const { return modulus_; }
  Element identity() const { return 0; }
  Element multiply(Element a, Element b) const { return (a + b) % modulus_; }
  Element inverse(Element a) const { return (modulus_ - a) % modulus_; }
  bool equal(Element a, Element b) const { return a == b; }
  bool contains(Element a) const { return a >= 0 && a < modulus_; }

 private:
  long modulus_;
};

// Finite group given by its multiplication table. Element 0 is the identity.
class TableGroup {
 public:
  using Element = int;

  // Validates closure, identity, associativity and the inverse table.
  // Throws MalformedInputError on any violation.
  TableGroup(int order, std::vector<int> table, std::vector<int> inverses);

  // Text format: "order q", q rows of q element ids, then
  // "inv: i_0 ... i_{q-1}". '#' starts a comment.
  static TableGroup parse(std::string_view text);
  static TableGroup load(const std::filesystem::path& path);

  int order() const { return order_; }
  Element identity() const { return 0; }
  Element multiply(Element a, Element b) const {
    return table_[static_cast<std::size_t>(a * order_ + b)];
  }
  Element inverse(Element a) const {
    return inverses_[static_cast<std::size_t>(a)];
  }
  bool equal(Element a, Element b) const { return a == b; }
  bool contains(Element a) const { return a >= 0 && a < order_; }

  friend bool operator==(const TableGroup&, const TableGroup&) = default;

 private:
  int order_;
  std::vector<int> table_;
  std::vector<int> inverses_;
};

// GL(d, Q). Equality with the identity is exact.
class MatrixGroup {
 public:
  using Element = RationalMatrix;

  explicit MatrixGroup(int dim);

  int dim() const { return dim_; }
  Element identity() const { return RationalMatrix::identity(dim_); }
  Element multiply(const Element& a, const Element& b) const { return a * b; }
  Element inverse(const Element& a) const;
  bool equal(const Element& a, const Element& b) const { return a == b; }
  bool contains(const Element& a) const;

 private:
  int dim_;
};

}  // namespace bgc

#endif  // BGC_GROUPS_HPP_
