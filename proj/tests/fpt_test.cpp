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

#include <cmath>

#include "bgc/bias.hpp"
#include "bgc/brute.hpp"
#include "bgc/errors.hpp"
#include "bgc/fix_state.hpp"
#include "bgc/fpt.hpp"
#include "bgc/reductions.hpp"
#include "reference.hpp"

namespace bgc {
namespace {

using testing::complete_graph;
using testing::cycle_graph;
using testing::generated;

Graph triangle() { return Graph(3, {{0, 1}, {0, 2}, {1, 2}}); }

Graph two_triangles() {
  return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
}

std::shared_ptr<CyclicOracle> odd_labels(const Graph& g) {
  return std::make_shared<CyclicOracle>(
      g, CyclicGroup(2),
      std::vector<long>(static_cast<std::size_t>(g.num_edges()) + 1, 1));
}

Vertex root_of(const Instance& inst) { return inst.spec.root.value_or(0); }

TEST(CertifyTest, Examples) {
  Graph k4 = complete_graph(4);
  EXPECT_TRUE(certify(k4, EmptyBias(), VertexSet{1, 2}, GlobalMode{}));
  EXPECT_FALSE(certify(k4, EmptyBias(), VertexSet{1}, GlobalMode{}));
  EXPECT_TRUE(certify(triangle(), EmptyBias(), VertexSet{1}, LocalMode{0}));
  EXPECT_THROW(certify(triangle(), EmptyBias(), VertexSet{0}, LocalMode{0}),
               PreconditionError);
}

TEST(CertifyTest, LocalModeIgnoresOtherComponents) {
  Graph g(5, {{0, 1}, {2, 3}, {3, 4}, {2, 4}});
  EXPECT_TRUE(certify(g, EmptyBias(), {}, LocalMode{0}));
  EXPECT_FALSE(certify(g, EmptyBias(), {}, GlobalMode{}));
}

TEST(BetterSolutionTest, SizeThenLexicographic) {
  EXPECT_TRUE(better_solution(VertexSet{5}, VertexSet{1, 2}));
  EXPECT_TRUE(better_solution(VertexSet{1, 3}, VertexSet{2, 3}));
  EXPECT_FALSE(better_solution(VertexSet{1, 3}, VertexSet{1, 3}));
}

TEST(ApproximateLocalTest, K4TakesAllHalves) {
  const auto approx = approximate_local(complete_graph(4), EmptyBias(), 0,
                                        unit_costs(4));
  EXPECT_EQ(approx.solution.deleted, (VertexSet{1, 2, 3}));
  EXPECT_EQ(approx.cost, 3);
  EXPECT_EQ(approx.lambda, Rational(3, 2));
}

TEST(ApproximateLocalTest, TriangleIsOptimal) {
  const auto approx = approximate_local(triangle(), EmptyBias(), 0, unit_costs(3));
  EXPECT_EQ(approx.cost, 1);
  EXPECT_EQ(approx.solution.deleted.size(), 1u);
}

TEST(ApproximateLocalTest, BalancedInstanceDeletesNothing) {
  Graph g = complete_graph(4);
  CyclicOracle oracle(g, CyclicGroup(2), std::vector<long>(7, 0));
  const auto approx = approximate_local(g, oracle, 0, unit_costs(4));
  EXPECT_TRUE(approx.solution.deleted.empty());
  EXPECT_EQ(approx.solution.region, (VertexSet{0, 1, 2, 3}));
}

TEST(ApproximateLocalTest, WithinTwiceTheOptimum) {
  const std::vector<Family> families{Family::kEmpty, Family::kCyclic,
                                     Family::kColour, Family::kApex,
                                     Family::kMultiway, Family::kMatrix};
  for (std::uint64_t seed = 1; seed <= 48; ++seed) {
    const Family family = families[seed % families.size()];
    const Instance inst = generated(family, 8, seed, 3, 3, seed % 2 == 0);
    const Vertex root = root_of(inst);
    SCOPED_TRACE(to_string(family) + " seed " + std::to_string(seed));
    const auto approx =
        approximate_local(inst.graph, *inst.oracle, root, inst.costs);
    const auto opt =
        brute_local_weighted(inst.graph, *inst.oracle, root, inst.costs);
    EXPECT_LE(approx.lambda, opt.optimum);
    EXPECT_LE(opt.optimum, approx.cost);
    EXPECT_LE(approx.cost, 2 * approx.lambda);
    EXPECT_TRUE(certify(inst.graph, *inst.oracle, approx.solution.deleted,
                        LocalMode{root}));
  }
}

TEST(SolveLocalTest, K4) {
  Graph g = complete_graph(4);
  const auto two = solve_local(g, EmptyBias(), 0, 2);
  ASSERT_TRUE(two.solution);
  EXPECT_EQ(two.solution->deleted.size(), 2u);
  EXPECT_EQ(two.stats.lambda_root, Rational(3, 2));
  EXPECT_FALSE(solve_local(g, EmptyBias(), 0, 1).solution);
}

TEST(SolveLocalTest, VertexCoverOfFiveCycle) {
  auto inst = build_apex_instance(cycle_graph(5));
  const auto three = solve_local(inst.graph, *inst.oracle, inst.root, 3);
  ASSERT_TRUE(three.solution);
  EXPECT_EQ(three.solution->deleted.size(), 3u);
  EXPECT_FALSE(solve_local(inst.graph, *inst.oracle, inst.root, 2).solution);
}

TEST(SolveLocalTest, LargeBudgetIsClamped) {
  const auto result = solve_local(complete_graph(4), EmptyBias(), 0, 100);
  ASSERT_TRUE(result.solution);
  EXPECT_EQ(result.solution->deleted.size(), 2u);
  EXPECT_THROW(solve_local(triangle(), EmptyBias(), 0, -1), PreconditionError);
}

TEST(SolveLocalTest, UnverifiedOracleIsCheckedForLinearity) {
  Graph theta(4, {{0, 1}, {0, 2}, {2, 1}, {0, 3}, {3, 1}});
  FunctionOracle bad([](const Graph&, const SimpleCycle& c) {
    return c.length() == 3;
  });
  EXPECT_THROW(solve_local(theta, bad, 0, 2), PreconditionError);
  EXPECT_THROW(solve_global(theta, bad, 2), PreconditionError);
}

struct Case {
  Family family;
  long modulus;
};

const std::vector<Case> kCases{{Family::kEmpty, 2},  {Family::kCyclic, 2},
                               {Family::kCyclic, 3}, {Family::kCyclic, 5},
                               {Family::kOct, 2},    {Family::kColour, 2},
                               {Family::kApex, 2},   {Family::kMultiway, 2},
                               {Family::kMatrix, 2}};

TEST(SolveLocalTest, ExactAndBudgetSoundAgainstBruteForce) {
  for (std::uint64_t seed = 1; seed <= 45; ++seed) {
    const Case c = kCases[seed % kCases.size()];
    const Instance inst = generated(c.family, 7 + static_cast<int>(seed % 3),
                                    seed, c.modulus, 3);
    const Vertex root = root_of(inst);
    SCOPED_TRACE(to_string(c.family) + " seed " + std::to_string(seed));
    const auto brute = brute_local(inst.graph, *inst.oracle, root);
    for (int k : {brute.optimum - 1, brute.optimum, brute.optimum + 1}) {
      if (k < 0) continue;
      const auto result = solve_local(inst.graph, *inst.oracle, root, k);
      ASSERT_EQ(result.solution.has_value(), brute.optimum <= k) << "k " << k;
      if (!result.solution) continue;
      EXPECT_EQ(static_cast<int>(result.solution->deleted.size()),
                brute.optimum);
      EXPECT_TRUE(certify(inst.graph, *inst.oracle, result.solution->deleted,
                          LocalMode{root}));
      EXPECT_FALSE(set_contains(result.solution->deleted, root));
      EXPECT_EQ(open_neighbourhood(inst.graph, result.solution->region),
                result.solution->deleted);
    }
  }
}

TEST(SolveLocalTest, RootPersistenceKeepsTheOptimum) {
  SolverOptions persistent;
  persistent.root_persistence = true;
  for (std::uint64_t seed = 1; seed <= 36; ++seed) {
    const Case c = kCases[seed % kCases.size()];
    const Instance inst = generated(c.family, 8, seed + 100, c.modulus, 3);
    const Vertex root = root_of(inst);
    SCOPED_TRACE(to_string(c.family) + " seed " + std::to_string(seed));
    const int k = inst.graph.num_vertices();
    const auto plain = solve_local(inst.graph, *inst.oracle, root, k);
    const auto fixed = solve_local(inst.graph, *inst.oracle, root, k, persistent);
    const auto brute = brute_local(inst.graph, *inst.oracle, root);
    ASSERT_TRUE(plain.solution);
    ASSERT_TRUE(fixed.solution);
    EXPECT_EQ(static_cast<int>(fixed.solution->deleted.size()), brute.optimum);
    EXPECT_EQ(plain.solution->deleted.size(), fixed.solution->deleted.size());
  }
}

TEST(SolveLocalTest, SearchDepthWithinBranchingBound) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Case c = kCases[seed % kCases.size()];
    const Instance inst = generated(c.family, 8, seed + 200, c.modulus, 3);
    const Vertex root = root_of(inst);
    const int k = brute_local(inst.graph, *inst.oracle, root).optimum;
    const auto result = solve_local(inst.graph, *inst.oracle, root, k);
    const Rational depth_bound = 2 * (k - result.stats.lambda_root) + 1;
    EXPECT_LE(Rational(static_cast<long>(result.stats.max_depth)), depth_bound)
        << to_string(c.family) << " seed " << seed;
  }
}

TEST(SolveLocalTest, KeepBranchRaisesLowerBound) {
  // Bland's rule leaves vertex 3 outside V_R here even though keeping it is
  // free, so the keep branch must hold the region at zero to make progress.
  const Instance inst = generated(Family::kColour, 8, 1298, 2, 2);
  const Vertex root = root_of(inst);
  const int k = brute_local(inst.graph, *inst.oracle, root).optimum;
  const auto result = solve_local(inst.graph, *inst.oracle, root, k);
  ASSERT_TRUE(result.solution);
  EXPECT_EQ(static_cast<int>(result.solution->deleted.size()), k);
  const Rational depth_bound = 2 * (k - result.stats.lambda_root) + 1;
  EXPECT_LE(Rational(static_cast<long>(result.stats.max_depth)), depth_bound);
}

TEST(SolveLocalTest, ParallelSearchIsDeterministic) {
  SolverOptions parallel;
  parallel.jobs = 4;
  for (std::uint64_t seed = 1; seed <= 18; ++seed) {
    const Case c = kCases[seed % kCases.size()];
    const Instance inst = generated(c.family, 9, seed + 300, c.modulus, 3);
    const Vertex root = root_of(inst);
    const int k = inst.graph.num_vertices();
    const auto a = solve_local(inst.graph, *inst.oracle, root, k);
    const auto b = solve_local(inst.graph, *inst.oracle, root, k, parallel);
    ASSERT_EQ(a.solution.has_value(), b.solution.has_value());
    if (a.solution) {
      EXPECT_EQ(a.solution->deleted, b.solution->deleted);
    }
    EXPECT_EQ(a.stats.branch_nodes, b.stats.branch_nodes);
    EXPECT_EQ(a.stats.lp_solves, b.stats.lp_solves);
  }
}

TEST(SolveGlobalTest, TwoTriangles) {
  const auto two = solve_global(two_triangles(), EmptyBias(), 2);
  ASSERT_TRUE(two.solution);
  ASSERT_EQ(two.solution->deleted.size(), 2u);
  EXPECT_LT(two.solution->deleted[0], 3);
  EXPECT_GE(two.solution->deleted[1], 3);
  EXPECT_FALSE(solve_global(two_triangles(), EmptyBias(), 1).solution);
}

TEST(SolveGlobalTest, K4AndOddCycle) {
  const auto k4 = solve_global(complete_graph(4), EmptyBias(), 4);
  ASSERT_TRUE(k4.solution);
  EXPECT_EQ(k4.solution->deleted.size(), 2u);
  Graph c5 = cycle_graph(5);
  const auto oct = solve_global(c5, *odd_labels(c5), 3);
  ASSERT_TRUE(oct.solution);
  EXPECT_EQ(oct.solution->deleted.size(), 1u);
}

TEST(SolveGlobalTest, BalancedGraphNeedsNothing) {
  Graph tree(4, {{0, 1}, {1, 2}, {1, 3}});
  const auto result = solve_global(tree, EmptyBias(), 0);
  ASSERT_TRUE(result.solution);
  EXPECT_TRUE(result.solution->deleted.empty());
}

TEST(SolveGlobalTest, ExactAndBudgetSoundAgainstBruteForce) {
  for (std::uint64_t seed = 1; seed <= 36; ++seed) {
    const Case c = kCases[seed % kCases.size()];
    const Instance inst = generated(c.family, 7 + static_cast<int>(seed % 2),
                                    seed + 400, c.modulus, 3);
    SCOPED_TRACE(to_string(c.family) + " seed " + std::to_string(seed));
    const auto brute = brute_global(inst.graph, *inst.oracle);
    for (int k : {brute.optimum - 1, brute.optimum}) {
      if (k < 0) continue;
      const auto result = solve_global(inst.graph, *inst.oracle, k);
      ASSERT_EQ(result.solution.has_value(), brute.optimum <= k) << "k " << k;
      if (!result.solution) continue;
      EXPECT_EQ(static_cast<int>(result.solution->deleted.size()),
                brute.optimum);
      EXPECT_TRUE(certify(inst.graph, *inst.oracle, result.solution->deleted,
                          GlobalMode{}));
      EXPECT_LE(static_cast<double>(result.stats.branch_nodes),
                2 * std::pow(4.0, k));
    }
  }
}

TEST(SolveGlobalTest, ParallelSearchIsDeterministic) {
  SolverOptions parallel;
  parallel.jobs = 4;
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const Case c = kCases[seed % kCases.size()];
    const Instance inst = generated(c.family, 8, seed + 500, c.modulus, 3);
    const int k = inst.graph.num_vertices();
    const auto a = solve_global(inst.graph, *inst.oracle, k);
    const auto b = solve_global(inst.graph, *inst.oracle, k, parallel);
    ASSERT_TRUE(a.solution);
    ASSERT_TRUE(b.solution);
    EXPECT_EQ(a.solution->deleted, b.solution->deleted);
  }
}

TEST(SolveGlobalTest, OracleQueriesAreCounted) {
  Graph g = complete_graph(5);
  EmptyBias oracle;
  const auto result = solve_global(g, oracle, 3);
  EXPECT_GT(result.stats.oracle_queries, 0u);
  EXPECT_GT(result.stats.lp_solves, 0u);
  EXPECT_GE(result.stats.branch_nodes, 1u);
}

}  // namespace
}  // namespace bgc
