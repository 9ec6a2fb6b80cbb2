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

#ifndef BGC_BRUTE_HPP_
#define BGC_BRUTE_HPP_

#include <optional>
#include <span>

#include "bgc/bias.hpp"
#include "bgc/graph.hpp"
#include "bgc/local_lp.hpp"
#include "bgc/rational.hpp"

namespace bgc {

// Exhaustive reference solvers. They share nothing with the LP pipeline
// except the graph type and the oracle.

inline constexpr int kBruteVertexLimit = 12;

struct BruteResult {
  int optimum = 0;
  VertexSet witness;
};

struct WeightedBruteResult {
  Rational optimum;
  VertexSet witness;
};

struct BruteBalloon {
  Balloon balloon;
  Rational weight;
};

// Smallest X not containing the root whose removal leaves the root's
// component balanced. Subsets are tried by increasing size in lexicographic
// order, so the witness is the lexicographically first optimum.
BruteResult brute_local(const Graph& g, const BiasOracle& oracle, Vertex root,
                        int max_vertices = kBruteVertexLimit);

// Smallest X such that G - X is balanced.
BruteResult brute_global(const Graph& g, const BiasOracle& oracle,
                         int max_vertices = kBruteVertexLimit);

// Minimum total cost version of brute_local.
WeightedBruteResult brute_local_weighted(const Graph& g,
                                         const BiasOracle& oracle, Vertex root,
                                         std::span<const Rational> costs,
                                         int max_vertices = kBruteVertexLimit);

// Minimum-weight balloon over every unbalanced cycle and every root path
// meeting it in exactly one vertex. Ties go to the smaller (cycle, path) pair
// in lexicographic order.
std::optional<BruteBalloon> brute_min_balloon(
    const Graph& g, const BiasOracle& oracle, const FractionalAssignment& x,
    int max_vertices = kBruteVertexLimit);

}  // namespace bgc

#endif  // BGC_BRUTE_HPP_
