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

#include "bgc/simplex.hpp"

#include <string>

#include "bgc/errors.hpp"

namespace bgc {

CoveringLp::CoveringLp(std::vector<Rational> costs) : costs_(std::move(costs)) {
  const int r = num_variables();
  for (auto& c : costs_) {
    c.canonicalize();
    if (c <= 0) throw PreconditionError("covering LP costs must be positive");
  }
  rows_.assign(static_cast<std::size_t>(r),
               std::vector<Rational>(static_cast<std::size_t>(r)));
  for (int i = 0; i < r; ++i) rows_[i][i] = 1;
  rhs_ = costs_;
  reduced_.assign(static_cast<std::size_t>(r), Rational(0));
  basis_.resize(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) basis_[i] = i;
}

void CoveringLp::add_constraint(
    std::span<const std::pair<int, int>> coefficients) {
  const int r = num_variables();
  std::vector<char> seen(static_cast<std::size_t>(r), 0);
  for (const auto& [var, coef] : coefficients) {
    if (var < 0 || var >= r || coef <= 0 || seen[var]++) {
      throw PreconditionError("malformed covering constraint");
    }
  }
  if (coefficients.empty()) {
    throw PreconditionError("covering constraint without variables is "
                            "infeasible");
  }
  // The slack block of the tableau is B^{-1}; the slack reduced costs are the
  // current covering solution.
  Rational reduced = -1;
  for (const auto& [var, coef] : coefficients) reduced += reduced_[var] * coef;
  for (int i = 0; i < r; ++i) {
    Rational entry = 0;
    for (const auto& [var, coef] : coefficients) {
      if (rows_[i][var] != 0) entry += rows_[i][var] * coef;
    }
    rows_[i].push_back(std::move(entry));
  }
  reduced_.push_back(std::move(reduced));
}

void CoveringLp::pivot(int row, int col) {
  auto& prow = rows_[row];
  const Rational inv = 1 / prow[col];
  for (auto& v : prow) {
    if (v != 0) v *= inv;
  }
  rhs_[row] *= inv;
  const int cols = num_columns();
  for (int i = 0; i < num_variables(); ++i) {
    if (i == row || rows_[i][col] == 0) continue;
    const Rational factor = rows_[i][col];
    for (int j = 0; j < cols; ++j) {
      if (prow[j] != 0) rows_[i][j] -= factor * prow[j];
    }
    rhs_[i] -= factor * rhs_[row];
  }
  if (reduced_[col] != 0) {
    const Rational factor = reduced_[col];
    for (int j = 0; j < cols; ++j) {
      if (prow[j] != 0) reduced_[j] -= factor * prow[j];
    }
  }
  basis_[row] = col;
  ++pivots_;
}

void CoveringLp::solve(std::size_t max_pivots) {
  std::size_t local = 0;
  for (;;) {
    int enter = -1;
    for (int j = 0; j < num_columns(); ++j) {
      if (reduced_[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) return;
    int leave = -1;
    Rational best_ratio;
    for (int i = 0; i < num_variables(); ++i) {
      if (rows_[i][enter] <= 0) continue;
      Rational ratio = rhs_[i] / rows_[i][enter];
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis_[i] < basis_[leave])) {
        leave = i;
        best_ratio = std::move(ratio);
      }
    }
    if (leave < 0) {
      throw InternalConsistencyError(
          "covering LP dual is unbounded; the primal must be infeasible");
    }
    if (++local > max_pivots) {
      throw LimitExceededError("simplex pivot limit of " +
                               std::to_string(max_pivots) + " exceeded");
    }
    pivot(leave, enter);
  }
}

std::vector<Rational> CoveringLp::solution() const {
  return {reduced_.begin(), reduced_.begin() + num_variables()};
}

Rational CoveringLp::objective() const {
  Rational total = 0;
  for (int i = 0; i < num_variables(); ++i) {
    if (basis_[i] >= num_variables()) total += rhs_[i];
  }
  return total;
}

}  // namespace bgc
