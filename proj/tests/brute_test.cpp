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

#include "bgc/bias.hpp"
#include "bgc/brute.hpp"
#include "bgc/errors.hpp"
#include "bgc/fix_state.hpp"
#include "bgc/reductions.hpp"
#include "reference.hpp"

namespace bgc {
namespace {

using testing::complete_graph;
using testing::cycle_graph;
using testing::random_graph;

Graph triangle() { return Graph(3, {{0, 1}, {0, 2}, {1, 2}}); }

TEST(BruteLocalTest, Examples) {
  EXPECT_EQ(brute_local(triangle(), EmptyBias(), 0).optimum, 1);
  const auto k4 = brute_local(complete_graph(4), EmptyBias(), 0);
  EXPECT_EQ(k4.optimum, 2);
  EXPECT_EQ(k4.witness, (VertexSet{1, 2}));
  Graph g = complete_graph(4);
  CyclicOracle balanced(g, CyclicGroup(2), std::vector<long>(7, 0));
  const auto none = brute_local(g, balanced, 0);
  EXPECT_EQ(none.optimum, 0);
  EXPECT_TRUE(none.witness.empty());
}

TEST(BruteGlobalTest, Examples) {
  Graph two(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_EQ(brute_global(two, EmptyBias()).optimum, 2);
  Graph c5 = cycle_graph(5);
  CyclicOracle odd(c5, CyclicGroup(2), std::vector<long>(6, 1));
  EXPECT_EQ(brute_global(c5, odd).optimum, 1);
  Graph forest(5, {{0, 1}, {1, 2}, {3, 4}});
  EXPECT_EQ(brute_global(forest, EmptyBias()).optimum, 0);
}

TEST(BruteTest, SizeLimit) {
  EXPECT_THROW(brute_global(Graph(13), EmptyBias()), LimitExceededError);
  EXPECT_THROW(brute_local(Graph(6), EmptyBias(), 0, 5), LimitExceededError);
}

TEST(BruteLocalWeightedTest, PrefersCheapVertices) {
  std::vector<Rational> costs{1, 5, Rational(1, 2)};
  const auto result = brute_local_weighted(triangle(), EmptyBias(), 0, costs);
  EXPECT_EQ(result.optimum, Rational(1, 2));
  EXPECT_EQ(result.witness, (VertexSet{2}));
}

TEST(BruteMinBalloonTest, Examples) {
  const auto zero =
      brute_min_balloon(triangle(), EmptyBias(), FractionalAssignment::zero(3, 0));
  ASSERT_TRUE(zero);
  EXPECT_EQ(zero->weight, 0);
  const FractionalAssignment halves{0, {0, Rational(1, 2), Rational(1, 2)}};
  const auto tight = brute_min_balloon(triangle(), EmptyBias(), halves);
  ASSERT_TRUE(tight);
  EXPECT_EQ(tight->weight, 1);
  EXPECT_FALSE(brute_min_balloon(Graph(3, {{0, 1}, {1, 2}}), EmptyBias(),
                                 FractionalAssignment::zero(3, 0)));
}

TEST(BruteMinBalloonTest, PathReachesCycleAtTheKnot) {
  // Root 0 hangs off the triangle (1,2,3) through vertex 1.
  Graph g(4, {{0, 1}, {1, 2}, {2, 3}, {1, 3}});
  const FractionalAssignment x{0, {0, Rational(1, 4), Rational(1, 2), 1}};
  const auto best = brute_min_balloon(g, EmptyBias(), x);
  ASSERT_TRUE(best);
  EXPECT_EQ(best->balloon.path.vertices, (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(best->balloon.knot, 1);
  EXPECT_EQ(best->weight, 2 * Rational(1, 4) + Rational(1, 2) + 1);
}

TEST(BruteLocalTest, ApexEqualsVertexCover) {
  Rng rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_graph(rng, 3 + static_cast<int>(rng.below(6)), 0.4);
    auto inst = build_apex_instance(g);
    EXPECT_EQ(brute_local(inst.graph, *inst.oracle, inst.root).optimum,
              testing::min_vertex_cover(g))
        << "trial " << trial;
  }
}

TEST(BruteLocalTest, MultiwayEqualsMinimumCut) {
  Rng rng(37);
  int checked = 0;
  while (checked < 25) {
    Graph g = random_graph(rng, 4 + static_cast<int>(rng.below(3)), 0.5);
    const Vertex s = 0;
    const Vertex t = g.num_vertices() - 1;
    if (g.degree(s) == 0 || g.degree(t) == 0 || g.adjacent(s, t)) continue;
    auto inst = build_multiway_instance(g, VertexSet{s, t});
    if (inst.graph.num_vertices() > kBruteVertexLimit) continue;
    EXPECT_EQ(brute_local(inst.graph, *inst.oracle, inst.root).optimum,
              testing::min_mixed_st_cut_brute(g, s, t));
    ++checked;
  }
}

TEST(ReferenceTest, FlowCutMatchesEnumeration) {
  Rng rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = random_graph(rng, 3 + static_cast<int>(rng.below(6)), 0.45);
    const Vertex t = g.num_vertices() - 1;
    EXPECT_EQ(testing::min_mixed_st_cut(g, 0, t),
              testing::min_mixed_st_cut_brute(g, 0, t))
        << "trial " << trial;
  }
}

}  // namespace
}  // namespace bgc
