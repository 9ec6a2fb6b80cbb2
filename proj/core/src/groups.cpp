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

#include "bgc/groups.hpp"

#include <fstream>
#include <sstream>

#include "bgc/errors.hpp"

namespace bgc {

RationalMatrix::RationalMatrix(int dim)
    : dim_(dim), entries_(static_cast<std::size_t>(dim * dim)) {
  if (dim <= 0) throw MalformedInputError("matrix dimension must be positive");
}

RationalMatrix::RationalMatrix(int dim, std::vector<Rational> row_major)
    : dim_(dim), entries_(std::move(row_major)) {
  if (dim <= 0) throw MalformedInputError("matrix dimension must be positive");
  if (entries_.size() != static_cast<std::size_t>(dim * dim)) {
    throw MalformedInputError("matrix of dimension " + std::to_string(dim) +
                              " needs " + std::to_string(dim * dim) +
                              " entries, got " +
                              std::to_string(entries_.size()));
  }
}

RationalMatrix RationalMatrix::identity(int dim) {
  RationalMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  if (dim_ != rhs.dim_) {
    throw MalformedInputError("matrix dimension mismatch");
  }
  RationalMatrix out(dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int k = 0; k < dim_; ++k) {
      if (at(i, k) == 0) continue;
      for (int j = 0; j < dim_; ++j) out.at(i, j) += at(i, k) * rhs.at(k, j);
    }
  }
  return out;
}

std::optional<RationalMatrix> RationalMatrix::inverse() const {
  RationalMatrix work = *this;
  RationalMatrix inv = identity(dim_);
  for (int col = 0; col < dim_; ++col) {
    int pivot = -1;
    for (int r = col; r < dim_; ++r) {
      if (work.at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return std::nullopt;
    if (pivot != col) {
      for (int j = 0; j < dim_; ++j) {
        std::swap(work.at(pivot, j), work.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    Rational scale = 1 / work.at(col, col);
    for (int j = 0; j < dim_; ++j) {
      work.at(col, j) *= scale;
      inv.at(col, j) *= scale;
    }
    for (int r = 0; r < dim_; ++r) {
      if (r == col || work.at(r, col) == 0) continue;
      Rational factor = work.at(r, col);
      for (int j = 0; j < dim_; ++j) {
        work.at(r, j) -= factor * work.at(col, j);
        inv.at(r, j) -= factor * inv.at(col, j);
      }
    }
  }
  return inv;
}

bool RationalMatrix::is_identity() const {
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      if (at(i, j) != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

CyclicGroup::CyclicGroup(long modulus) : modulus_(modulus) {
  if (modulus < 1) throw MalformedInputError("cyclic modulus must be >= 1");
}

TableGroup::TableGroup(int order, std::vector<int> table,
                       std::vector<int> inverses)
    : order_(order), table_(std::move(table)), inverses_(std::move(inverses)) {
  if (order_ < 1) throw MalformedInputError("group order must be >= 1");
  const auto q = static_cast<std::size_t>(order_);
  if (table_.size() != q * q) {
    throw MalformedInputError("multiplication table must be order x order");
  }
  if (inverses_.size() != q) {
    throw MalformedInputError("inverse table must list one entry per element");
  }
  for (int x : table_) {
    if (!contains(x)) {
      throw MalformedInputError("multiplication table entry out of range");
    }
  }
  for (int x : inverses_) {
    if (!contains(x)) throw MalformedInputError("inverse entry out of range");
  }
  for (int a = 0; a < order_; ++a) {
    if (multiply(0, a) != a || multiply(a, 0) != a) {
      throw MalformedInputError("element 0 is not the identity");
    }
    if (multiply(a, inverse(a)) != 0 || multiply(inverse(a), a) != 0) {
      throw MalformedInputError("inverse table inconsistent for element " +
                                std::to_string(a));
    }
  }
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) {
      for (int c = 0; c < order_; ++c) {
        if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c))) {
          throw MalformedInputError("multiplication is not associative");
        }
      }
    }
  }
}

TableGroup TableGroup::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int order = -1;
  std::vector<int> table;
  std::vector<int> inverses;
  bool have_inverses = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream tokens(line);
    std::string head;
    if (!(tokens >> head)) continue;
    if (head == "order") {
      if (order >= 0 || !(tokens >> order) || order < 1) {
        throw ParseError(line_no, "expected a single 'order q' line");
      }
    } else if (head == "inv:") {
      if (order < 0) throw ParseError(line_no, "'inv:' before 'order'");
      int x;
      while (tokens >> x) inverses.push_back(x);
      have_inverses = true;
    } else {
      if (order < 0) throw ParseError(line_no, "table row before 'order'");
      std::istringstream row(line);
      int x;
      int count = 0;
      while (row >> x) {
        table.push_back(x);
        ++count;
      }
      if (!row.eof() || count != order) {
        throw ParseError(line_no, "table row must hold " +
                                      std::to_string(order) + " integers");
      }
    }
  }
  if (order < 0) throw ParseError(0, "missing 'order' line");
  if (!have_inverses) throw ParseError(0, "missing 'inv:' line");
  try {
    return TableGroup(order, std::move(table), std::move(inverses));
  } catch (const MalformedInputError& e) {
    throw ParseError(0, e.what());
  }
}

TableGroup TableGroup::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open group table " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

MatrixGroup::MatrixGroup(int dim) : dim_(dim) {
  if (dim < 1) throw MalformedInputError("matrix dimension must be >= 1");
}

MatrixGroup::Element MatrixGroup::inverse(const Element& a) const {
  auto inv = a.inverse();
  if (!inv) throw MalformedInputError("singular matrix label");
  return *inv;
}

bool MatrixGroup::contains(const Element& a) const {
  return a.dim() == dim_ && a.inverse().has_value();
}

}  // namespace bgc
