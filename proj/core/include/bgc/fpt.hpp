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

#ifndef BGC_FPT_HPP_
#define BGC_FPT_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "bgc/bias.hpp"
#include "bgc/graph.hpp"
#include "bgc/local_lp.hpp"
#include "bgc/rational.hpp"

namespace bgc {

struct LocalSolution {
  VertexSet deleted;  // X, never contains the root
  VertexSet region;   // component of the root in G - X
};

struct GlobalSolution {
  VertexSet deleted;
};

struct SearchStats {
  std::size_t branch_nodes = 0;
  std::size_t leaves = 0;
  std::size_t max_depth = 0;
  std::size_t lp_solves = 0;
  std::size_t lp_rounds = 0;
  std::uint64_t oracle_queries = 0;
  Rational lambda_root;  // local search only

  SearchStats& operator+=(const SearchStats& other);
};

struct SolverOptions {
  LpOptions lp;
  int jobs = 1;
  // Local search only: also fix V_1 to 1 at the root node.
  bool root_persistence = false;
};

struct LocalResult {
  std::optional<LocalSolution> solution;
  SearchStats stats;
};

struct GlobalResult {
  std::optional<GlobalSolution> solution;
  SearchStats stats;
};

struct ApproxResult {
  LocalSolution solution;
  Rational cost;
  Rational lambda;
  HalfIntegralCertificate certificate;
};

// Deletes V_1 and V_1/2 of a half-integral LP optimum. Cost is at most
// 2 * lambda. Works with arbitrary positive costs.
ApproxResult approximate_local(const Graph& g, const BiasOracle& oracle,
                               Vertex root, std::span<const Rational> costs,
                               const LpOptions& options = {});

// Minimum X with |X| <= k whose removal leaves the root's component balanced.
// Unit costs. Budgets of n or more are treated as n - 1.
LocalResult solve_local(const Graph& g, const BiasOracle& oracle, Vertex root,
                        int k, const SolverOptions& options = {});

// Minimum X with |X| <= k such that G - X is balanced. Unit costs.
GlobalResult solve_global(const Graph& g, const BiasOracle& oracle, int k,
                          const SolverOptions& options = {});

struct LocalMode {
  Vertex root = 0;
};
struct GlobalMode {};
using CertifyMode = std::variant<LocalMode, GlobalMode>;

// Independent solution check. Throws PreconditionError when x contains the
// root in local mode.
bool certify(const Graph& g, const BiasOracle& oracle, const VertexSet& x,
             const CertifyMode& mode);

// Minimum-cardinality order with lexicographic tiebreak.
bool better_solution(const VertexSet& a, const VertexSet& b);

}  // namespace bgc

#endif  // BGC_FPT_HPP_
