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

#ifndef BGC_LOCAL_LP_HPP_
#define BGC_LOCAL_LP_HPP_

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bgc/bias.hpp"
#include "bgc/graph.hpp"
#include "bgc/rational.hpp"

namespace bgc {

// x : V -> [0, 1] with x(root) = 0.
struct FractionalAssignment {
  Vertex root = 0;
  std::vector<Rational> values;

  static FractionalAssignment zero(int n, Vertex root);

  const Rational& operator[](Vertex v) const { return values[v]; }
  Rational& operator[](Vertex v) { return values[v]; }
  int size() const { return static_cast<int>(values.size()); }

  // Throws PreconditionError unless the assignment fits g and its invariants.
  void validate(const Graph& g) const;

  friend bool operator==(const FractionalAssignment&,
                         const FractionalAssignment&) = default;
};

// A root path plus an unbalanced cycle meeting it exactly at the knot.
struct Balloon {
  VertexPath path;
  SimpleCycle cycle;
  Vertex knot = 0;
};

// sum coefficient(v) * x(v) >= 1 with coefficient 2 on the path (root and knot
// included) and 1 on the rest of the cycle.
struct BalloonConstraint {
  std::vector<std::pair<Vertex, int>> coefficients;  // sorted by vertex

  static BalloonConstraint from_balloon(const Balloon& b);
  Rational weight(const FractionalAssignment& x) const;

  friend bool operator==(const BalloonConstraint&,
                         const BalloonConstraint&) = default;
};

// Length under x with a deterministic infinitesimal tiebreak: edge i adds
// (x_u + x_v)/2 to `value` and 2^i to `perturbation`. Compared
// lexicographically, so distinct edge sets never tie.
struct PerturbedLength {
  Rational value;
  BigInt perturbation;

  PerturbedLength& operator+=(const PerturbedLength& rhs) {
    value += rhs.value;
    perturbation += rhs.perturbation;
    return *this;
  }
  friend PerturbedLength operator+(PerturbedLength lhs,
                                   const PerturbedLength& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend bool operator==(const PerturbedLength& a, const PerturbedLength& b) {
    return a.value == b.value && a.perturbation == b.perturbation;
  }
  friend std::strong_ordering operator<=>(const PerturbedLength& a,
                                          const PerturbedLength& b) {
    if (a.value != b.value) {
      return a.value < b.value ? std::strong_ordering::less
                               : std::strong_ordering::greater;
    }
    if (a.perturbation != b.perturbation) {
      return a.perturbation < b.perturbation ? std::strong_ordering::less
                                             : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }
};

// l_x(uv) = (x_u + x_v)/2 paired with 2^index.
PerturbedLength edge_length(const Graph& g, const FractionalAssignment& x,
                            EdgeIndex e);

struct ShortestPathTree {
  Vertex root = 0;
  // nullopt marks an unreachable vertex (infinite distance).
  std::vector<std::optional<PerturbedLength>> distance;
  std::vector<Vertex> parent;  // -1 for the root and unreachable vertices

  bool reachable(Vertex v) const { return distance[v].has_value(); }
  VertexPath path_to(Vertex v) const;
};

// Single-source shortest paths from x.root under the perturbed metric
// (Dijkstra; lengths are non-negative).
ShortestPathTree shortest_path_tree(const Graph& g,
                                    const FractionalAssignment& x);

struct SeparationResult {
  Balloon balloon;
  Rational weight;
  PerturbedLength perturbed_weight;
  EdgeIndex closing_edge = 0;  // the edge uv of the decomposition
};

// Minimum-weight balloon among those assembled from two shortest-path tree
// branches and a closing edge, whatever its weight. nullopt when no candidate
// cycle is unbalanced.
std::optional<SeparationResult> minimum_candidate_balloon(
    const Graph& g, const BiasOracle& oracle, const FractionalAssignment& x);

// A balloon of weight < 1 if one exists, the minimum-weight one; otherwise
// nullopt. Exact under a linear class.
std::optional<SeparationResult> separate(const Graph& g,
                                         const BiasOracle& oracle,
                                         const FractionalAssignment& x);

struct HalfIntegralCertificate;

// Observer for every certificate produced by maximize_reachable_region and
// approximate_local, with the effective costs it was computed under. Must be
// thread-safe when searches run with several jobs.
using CertificateHook =
    std::function<void(const Graph&, const BiasOracle&,
                       const HalfIntegralCertificate&,
                       std::span<const Rational>)>;

struct LpOptions {
  std::size_t max_rounds = 100'000;
  std::size_t max_pivots = 1'000'000;
  CertificateHook on_certificate;
};

struct LocalLpResult {
  FractionalAssignment x;
  Rational lambda;
  std::vector<BalloonConstraint> pool;
  std::size_t rounds = 0;  // cutting-plane rounds (constraints added)
};

// Cutting-plane solve of the local LP. Starts from x = 0 (or from the optimum
// over `initial_pool` when given) and adds the minimum-weight violated balloon
// each round. The returned x is a basic optimum feasible for every balloon.
LocalLpResult solve_local_lp(const Graph& g, const BiasOracle& oracle,
                             Vertex root, std::span<const Rational> costs,
                             const LpOptions& options = {},
                             std::span<const BalloonConstraint> initial_pool = {});

struct HalfIntegralCertificate {
  Rational lambda;
  VertexSet reachable;  // V_R
  VertexSet ones;       // V_1
  VertexSet halves;     // V_1/2
  FractionalAssignment rounded;
};

// Extracts (V_R, V_1, V_1/2) from an LP optimum and checks that the rounded
// assignment is feasible, half-integral and of objective lambda. Throws
// InternalConsistencyError otherwise.
HalfIntegralCertificate round_half_integral(const Graph& g,
                                            const BiasOracle& oracle,
                                            const FractionalAssignment& x_star,
                                            const Rational& lambda,
                                            std::span<const Rational> costs);

struct RegionResult {
  HalfIntegralCertificate certificate;
  VertexSet fixed_zero;  // input fixes plus the zero-fixes that were kept
  std::size_t lp_solves = 0;
  std::size_t lp_rounds = 0;
};

// Solves under fix costs, then grows V_R by tentatively fixing half-valued
// vertices to 0 in ascending id order, keeping a fix when lambda stays equal.
// Afterwards fixing any remaining unfixed half vertex to 0 raises lambda.
// `pool` carries balloon constraints across solves on the same graph/root.
RegionResult maximize_reachable_region(const Graph& g, const BiasOracle& oracle,
                                       Vertex root,
                                       std::span<const Rational> base_costs,
                                       const VertexSet& fixed_zero,
                                       const VertexSet& fixed_one,
                                       const LpOptions& options,
                                       std::vector<BalloonConstraint>& pool);

RegionResult maximize_reachable_region(const Graph& g, const BiasOracle& oracle,
                                       Vertex root,
                                       std::span<const Rational> base_costs,
                                       const VertexSet& fixed_zero = {},
                                       const VertexSet& fixed_one = {},
                                       const LpOptions& options = {});

Rational objective(std::span<const Rational> costs,
                   const FractionalAssignment& x);

}  // namespace bgc

#endif  // BGC_LOCAL_LP_HPP_
