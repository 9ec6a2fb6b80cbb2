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

#ifndef BGC_SIMPLEX_HPP_
#define BGC_SIMPLEX_HPP_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "bgc/rational.hpp"

namespace bgc {

// Exact covering LP
//
//     min  c.x   s.t.  A x >= 1,  x >= 0,
//
// with non-negative integer A and strictly positive c. The solver runs the
// primal simplex method with Bland's rule on the dual packing LP
//
//     max  1.y   s.t.  A^T y <= c,  y >= 0,
//
// whose slack basis is feasible because c > 0. Constraints of the covering LP
// are dual columns, so appending one between solves keeps the current basis
// feasible and needs no phase one. The covering solution is read off the
// reduced costs of the slack columns, which makes it basic (a vertex).
class CoveringLp {
 public:
  explicit CoveringLp(std::vector<Rational> costs);

  int num_variables() const { return static_cast<int>(costs_.size()); }
  int num_constraints() const { return num_columns() - num_variables(); }

  // Adds sum_j coef_j * x_{var_j} >= 1. Coefficients must be positive and
  // variables distinct and in range.
  void add_constraint(std::span<const std::pair<int, int>> coefficients);

  // Pivots to optimality. Throws LimitExceededError after `max_pivots`.
  void solve(std::size_t max_pivots = 1'000'000);

  // Covering solution of the last solve().
  std::vector<Rational> solution() const;
  // Dual objective of the current basis; equals c.x at optimality.
  Rational objective() const;

  std::size_t pivots() const { return pivots_; }

 private:
  int num_columns() const { return static_cast<int>(reduced_.size()); }
  void pivot(int row, int col);

  std::vector<Rational> costs_;
  std::vector<std::vector<Rational>> rows_;  // rows_[i][j]: B^{-1} column j
  std::vector<Rational> rhs_;                // basic values
  std::vector<Rational> reduced_;            // z_j - c_j
  std::vector<int> basis_;
  std::size_t pivots_ = 0;
};

}  // namespace bgc

#endif  // BGC_SIMPLEX_HPP_
