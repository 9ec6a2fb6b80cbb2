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

#include <gtest/gtest.h>

#include <utility>
#include <vector>

#include "bgc/errors.hpp"
#include "bgc/simplex.hpp"

namespace bgc {
namespace {

using Row = std::vector<std::pair<int, int>>;

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

TEST(CoveringLpTest, NoConstraintsGivesZero) {
  CoveringLp lp({Rational(1), Rational(2)});
  lp.solve();
  EXPECT_EQ(lp.solution(), (std::vector<Rational>{0, 0}));
  EXPECT_EQ(lp.objective(), 0);
}

TEST(CoveringLpTest, SingleEdgeCover) {
  CoveringLp lp({Rational(1), Rational(1)});
  lp.add_constraint(Row{{0, 1}, {1, 1}});
  lp.solve();
  EXPECT_EQ(lp.objective(), 1);
  EXPECT_EQ(dot(lp.solution(), {1, 1}), 1);
}

TEST(CoveringLpTest, FractionalOptimum) {
  // min x + y with 2x + y >= 1 and x + 2y >= 1.
  CoveringLp lp({Rational(1), Rational(1)});
  lp.add_constraint(Row{{0, 2}, {1, 1}});
  lp.add_constraint(Row{{0, 1}, {1, 2}});
  lp.solve();
  EXPECT_EQ(lp.solution(), (std::vector<Rational>{Rational(1, 3), Rational(1, 3)}));
  EXPECT_EQ(lp.objective(), Rational(2, 3));
}

TEST(CoveringLpTest, TriangleFractionalCover) {
  CoveringLp lp({Rational(1), Rational(1), Rational(1)});
  lp.add_constraint(Row{{0, 1}, {1, 1}});
  lp.add_constraint(Row{{1, 1}, {2, 1}});
  lp.add_constraint(Row{{0, 1}, {2, 1}});
  lp.solve();
  EXPECT_EQ(lp.objective(), Rational(3, 2));
  for (const auto& v : lp.solution()) EXPECT_EQ(v, Rational(1, 2));
}

TEST(CoveringLpTest, ReSolvesAfterAddingConstraints) {
  CoveringLp lp({Rational(3), Rational(1), Rational(2)});
  lp.add_constraint(Row{{0, 1}, {1, 1}});
  lp.solve();
  EXPECT_EQ(lp.objective(), 1);
  lp.add_constraint(Row{{0, 1}, {2, 1}});
  lp.solve();
  EXPECT_EQ(lp.objective(), 3);
  const auto x = lp.solution();
  EXPECT_GE(x[0] + x[1], 1);
  EXPECT_GE(x[0] + x[2], 1);
  EXPECT_EQ(dot(x, {3, 1, 2}), 3);
}

TEST(CoveringLpTest, RandomInstancesAreFeasibleAndConsistent) {
  std::uint64_t state = 17;
  auto next = [&](int bound) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<int>((state >> 33) % static_cast<std::uint64_t>(bound));
  };
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + next(5);
    std::vector<Rational> costs;
    for (int i = 0; i < n; ++i) {
      costs.emplace_back(1 + next(4), 1 + next(3));
      costs.back().canonicalize();
    }
    CoveringLp lp(costs);
    std::vector<Row> rows;
    Rational previous = 0;
    for (int r = 0; r < 6; ++r) {
      Row row;
      for (int j = 0; j < n; ++j) {
        if (next(2)) row.emplace_back(j, 1 + next(2));
      }
      if (row.empty()) row.emplace_back(next(n), 1);
      lp.add_constraint(row);
      rows.push_back(row);
      lp.solve();
      const auto x = lp.solution();
      for (const auto& constraint : rows) {
        Rational lhs = 0;
        for (auto [j, a] : constraint) lhs += a * x[j];
        EXPECT_GE(lhs, 1);
      }
      for (const auto& v : x) EXPECT_GE(v, 0);
      EXPECT_EQ(dot(costs, x), lp.objective());
      EXPECT_GE(lp.objective(), previous);
      previous = lp.objective();
    }
  }
}

TEST(CoveringLpTest, RejectsBadInput) {
  EXPECT_THROW(CoveringLp({Rational(0)}), PreconditionError);
  CoveringLp lp({Rational(1), Rational(1)});
  EXPECT_THROW(lp.add_constraint(Row{}), PreconditionError);
  EXPECT_THROW(lp.add_constraint(Row{{0, 0}}), PreconditionError);
  EXPECT_THROW(lp.add_constraint(Row{{0, 1}, {0, 1}}), PreconditionError);
  EXPECT_THROW(lp.add_constraint(Row{{2, 1}}), PreconditionError);
}

}  // namespace
}  // namespace bgc
