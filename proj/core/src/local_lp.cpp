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

#include "bgc/local_lp.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "bgc/errors.hpp"
#include "bgc/fix_state.hpp"
#include "bgc/simplex.hpp"

namespace bgc {

FractionalAssignment FractionalAssignment::zero(int n, Vertex root) {
  FractionalAssignment x;
  x.root = root;
  x.values.assign(static_cast<std::size_t>(n), Rational(0));
  return x;
}

void FractionalAssignment::validate(const Graph& g) const {
  if (size() != g.num_vertices()) {
    throw PreconditionError("assignment size does not match the graph");
  }
  if (!g.contains(root)) throw PreconditionError("root out of range");
  if (values[root] != 0) throw PreconditionError("x(root) must be 0");
  for (const auto& v : values) {
    if (v < 0 || v > 1) {
      throw PreconditionError("assignment value " + to_string(v) +
                              " outside [0, 1]");
    }
  }
}

BalloonConstraint BalloonConstraint::from_balloon(const Balloon& b) {
  BalloonConstraint c;
  for (Vertex v : b.path.vertices) c.coefficients.emplace_back(v, 2);
  for (Vertex v : b.cycle.vertices) {
    if (v != b.knot) c.coefficients.emplace_back(v, 1);
  }
  std::sort(c.coefficients.begin(), c.coefficients.end());
  return c;
}

Rational BalloonConstraint::weight(const FractionalAssignment& x) const {
  Rational total = 0;
  for (const auto& [v, coef] : coefficients) total += coef * x[v];
  return total;
}

PerturbedLength edge_length(const Graph& g, const FractionalAssignment& x,
                            EdgeIndex e) {
  const Edge& edge = g.edge(e);
  PerturbedLength len;
  len.value = (x[edge.u] + x[edge.v]) / 2;
  mpz_setbit(len.perturbation.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
  return len;
}

VertexPath ShortestPathTree::path_to(Vertex v) const {
  if (!reachable(v)) {
    throw PreconditionError("vertex " + std::to_string(v) +
                            " is unreachable from the root");
  }
  VertexPath path;
  for (Vertex cur = v; cur >= 0; cur = parent[cur]) {
    path.vertices.push_back(cur);
  }
  std::reverse(path.vertices.begin(), path.vertices.end());
  return path;
}

ShortestPathTree shortest_path_tree(const Graph& g,
                                    const FractionalAssignment& x) {
  x.validate(g);
  const int n = g.num_vertices();
  ShortestPathTree tree;
  tree.root = x.root;
  tree.distance.assign(static_cast<std::size_t>(n), std::nullopt);
  tree.parent.assign(static_cast<std::size_t>(n), -1);

  using Entry = std::pair<PerturbedLength, Vertex>;
  auto greater = [](const Entry& a, const Entry& b) {
    if (auto cmp = a.first <=> b.first; cmp != 0) return cmp > 0;
    return a.second > b.second;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(greater)> queue(
      greater);
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  tree.distance[x.root] = PerturbedLength{};
  queue.emplace(PerturbedLength{}, x.root);
  while (!queue.empty()) {
    auto [dist, u] = queue.top();
    queue.pop();
    if (done[u]) continue;
    done[u] = 1;
    for (const auto& inc : g.incident(u)) {
      if (done[inc.neighbor]) continue;
      PerturbedLength candidate = dist + edge_length(g, x, inc.edge);
      auto& slot = tree.distance[inc.neighbor];
      if (!slot || candidate < *slot) {
        slot = candidate;
        tree.parent[inc.neighbor] = u;
        queue.emplace(std::move(candidate), inc.neighbor);
      }
    }
  }
  return tree;
}

std::optional<SeparationResult> minimum_candidate_balloon(
    const Graph& g, const BiasOracle& oracle, const FractionalAssignment& x) {
  const ShortestPathTree tree = shortest_path_tree(g, x);
  std::optional<SeparationResult> best;
  for (EdgeIndex e = 1; e <= g.num_edges(); ++e) {
    const Edge& edge = g.edge(e);
    if (!tree.reachable(edge.u) || !tree.reachable(edge.v)) continue;
    if (tree.parent[edge.u] == edge.v || tree.parent[edge.v] == edge.u) {
      continue;
    }
    auto closed = close_cycle(g, tree.path_to(edge.u), tree.path_to(edge.v), e);
    if (!closed) continue;
    PerturbedLength total =
        *tree.distance[edge.u] + *tree.distance[edge.v] + edge_length(g, x, e);
    if (best && !(total < best->perturbed_weight)) continue;
    if (oracle.is_balanced(g, closed->cycle)) continue;
    SeparationResult result;
    result.balloon.path = std::move(closed->stem);
    result.balloon.cycle = std::move(closed->cycle);
    result.balloon.knot = closed->knot;
    result.weight = total.value;
    result.perturbed_weight = std::move(total);
    result.closing_edge = e;
    best = std::move(result);
  }
  return best;
}

std::optional<SeparationResult> separate(const Graph& g,
                                         const BiasOracle& oracle,
                                         const FractionalAssignment& x) {
  auto best = minimum_candidate_balloon(g, oracle, x);
  if (best && best->weight < 1) return best;
  return std::nullopt;
}

Rational objective(std::span<const Rational> costs,
                   const FractionalAssignment& x) {
  Rational total = 0;
  for (int v = 0; v < x.size(); ++v) total += costs[v] * x[v];
  return total;
}

namespace {

void check_costs(const Graph& g, Vertex root, std::span<const Rational> costs) {
  if (!g.contains(root)) throw PreconditionError("root out of range");
  if (costs.size() != static_cast<std::size_t>(g.num_vertices())) {
    throw PreconditionError("one cost per vertex is required");
  }
  for (const auto& c : costs) {
    if (c <= 0) throw PreconditionError("vertex costs must be positive");
  }
}

class LpDriver {
 public:
  LpDriver(const Graph& g, Vertex root, std::span<const Rational> costs)
      : root_(root), n_(g.num_vertices()), lp_(variable_costs(costs, root)) {}

  void add(const BalloonConstraint& c) {
    std::vector<std::pair<int, int>> coefs;
    for (const auto& [v, coef] : c.coefficients) {
      if (v != root_) coefs.emplace_back(var(v), coef);
    }
    lp_.add_constraint(coefs);
  }

  FractionalAssignment solve(std::size_t max_pivots) {
    lp_.solve(max_pivots);
    auto values = lp_.solution();
    FractionalAssignment x = FractionalAssignment::zero(n_, root_);
    for (Vertex v = 0; v < n_; ++v) {
      if (v != root_) x[v] = values[var(v)];
    }
    return x;
  }

  Rational dual_objective() const { return lp_.objective(); }

 private:
  static std::vector<Rational> variable_costs(std::span<const Rational> costs,
                                              Vertex root) {
    std::vector<Rational> out;
    for (std::size_t v = 0; v < costs.size(); ++v) {
      if (static_cast<Vertex>(v) != root) out.push_back(costs[v]);
    }
    return out;
  }
  int var(Vertex v) const { return v < root_ ? v : v - 1; }

  Vertex root_;
  int n_;
  CoveringLp lp_;
};

}  // namespace

LocalLpResult solve_local_lp(const Graph& g, const BiasOracle& oracle,
                             Vertex root, std::span<const Rational> costs,
                             const LpOptions& options,
                             std::span<const BalloonConstraint> initial_pool) {
  check_costs(g, root, costs);
  LpDriver driver(g, root, costs);
  LocalLpResult result;
  for (const auto& c : initial_pool) {
    driver.add(c);
    result.pool.push_back(c);
  }
  result.x = initial_pool.empty() ? FractionalAssignment::zero(
                                        g.num_vertices(), root)
                                  : driver.solve(options.max_pivots);
  while (auto violated = separate(g, oracle, result.x)) {
    if (++result.rounds > options.max_rounds) {
      throw LimitExceededError("cutting-plane round limit of " +
                               std::to_string(options.max_rounds) +
                               " exceeded");
    }
    auto constraint = BalloonConstraint::from_balloon(violated->balloon);
    driver.add(constraint);
    result.pool.push_back(std::move(constraint));
    result.x = driver.solve(options.max_pivots);
  }
  result.lambda = objective(costs, result.x);
  if (!result.pool.empty() && result.lambda != driver.dual_objective()) {
    throw InternalConsistencyError("LP primal and dual objectives differ");
  }
  return result;
}

HalfIntegralCertificate round_half_integral(const Graph& g,
                                            const BiasOracle& oracle,
                                            const FractionalAssignment& x_star,
                                            const Rational& lambda,
                                            std::span<const Rational> costs) {
  x_star.validate(g);
  check_costs(g, x_star.root, costs);
  if (objective(costs, x_star) != lambda) {
    throw PreconditionError("lambda does not match the objective of x_star");
  }
  const int n = g.num_vertices();
  HalfIntegralCertificate cert;
  cert.lambda = lambda;

  VertexSet zeros;
  for (Vertex v = 0; v < n; ++v) {
    if (x_star[v] == 0) zeros.push_back(v);
    if (x_star[v] == 1) cert.ones.push_back(v);
  }
  cert.reachable = connected_component(g, x_star.root, zeros);
  const VertexSet boundary = open_neighbourhood(g, cert.reachable);
  if (!std::includes(boundary.begin(), boundary.end(), cert.ones.begin(),
                     cert.ones.end())) {
    throw InternalConsistencyError(
        "a vertex with x = 1 is not adjacent to the reachable region");
  }
  cert.halves = set_difference(boundary, cert.ones);

  cert.rounded = FractionalAssignment::zero(n, x_star.root);
  for (Vertex v : cert.ones) cert.rounded[v] = 1;
  for (Vertex v : cert.halves) cert.rounded[v] = half();

  const Rational rounded_value = objective(costs, cert.rounded);
  if (rounded_value != lambda) {
    throw InternalConsistencyError("half-integral rounding has objective " +
                                   to_string(rounded_value) +
                                   " but the LP optimum is " +
                                   to_string(lambda));
  }
  if (auto violated = separate(g, oracle, cert.rounded)) {
    throw InternalConsistencyError(
        "half-integral rounding violates a balloon of weight " +
        to_string(violated->weight));
  }
  return cert;
}

RegionResult maximize_reachable_region(const Graph& g, const BiasOracle& oracle,
                                       Vertex root,
                                       std::span<const Rational> base_costs,
                                       const VertexSet& fixed_zero,
                                       const VertexSet& fixed_one,
                                       const LpOptions& options,
                                       std::vector<BalloonConstraint>& pool) {
  check_costs(g, root, base_costs);
  FixState fix{fixed_zero, fixed_one,
               std::vector<Rational>(base_costs.begin(), base_costs.end())};
  fix.validate();

  RegionResult result;
  auto solve = [&](const FixState& state) {
    const auto costs = state.effective_costs();
    auto lp = solve_local_lp(g, oracle, root, costs, options, pool);
    pool = std::move(lp.pool);
    ++result.lp_solves;
    result.lp_rounds += lp.rounds;
    auto cert = round_half_integral(g, oracle, lp.x, lp.lambda, costs);
    if (options.on_certificate) options.on_certificate(g, oracle, cert, costs);
    return cert;
  };

  // Fixed-one vertices cost 1/(3n) each, so their share of lambda can move
  // without the LP of G - fixed_one moving. Only the remaining share decides
  // whether a zero-fix is free.
  auto settled = [&](const HalfIntegralCertificate& cert) {
    const auto costs = fix.effective_costs();
    Rational value = cert.lambda;
    for (Vertex v : fix.fixed_one) value -= costs[v] * cert.rounded[v];
    return value;
  };

  result.certificate = solve(fix);
  for (bool changed = true; changed;) {
    changed = false;
    const VertexSet candidates = result.certificate.halves;
    for (Vertex v : candidates) {
      if (fix.is_fixed(v) || v == root ||
          !set_contains(result.certificate.halves, v)) {
        continue;
      }
      // Holding the current region at zero as well means an unchanged lambda
      // puts v, a neighbour of the region, inside the new region.
      FixState trial = fix;
      trial.fixed_zero = set_union(
          trial.fixed_zero,
          set_difference(set_union(result.certificate.reachable, VertexSet{v}),
                         fix.fixed_one));
      auto cert = solve(trial);
      const auto& before = result.certificate.reachable;
      if (settled(cert) == settled(result.certificate) &&
          set_contains(cert.reachable, v) &&
          std::includes(cert.reachable.begin(), cert.reachable.end(),
                        before.begin(), before.end())) {
        fix = std::move(trial);
        result.certificate = std::move(cert);
        changed = true;
      }
    }
  }
  result.fixed_zero = fix.fixed_zero;
  return result;
}

RegionResult maximize_reachable_region(const Graph& g, const BiasOracle& oracle,
                                       Vertex root,
                                       std::span<const Rational> base_costs,
                                       const VertexSet& fixed_zero,
                                       const VertexSet& fixed_one,
                                       const LpOptions& options) {
  std::vector<BalloonConstraint> pool;
  return maximize_reachable_region(g, oracle, root, base_costs, fixed_zero,
                                   fixed_one, options, pool);
}

}  // namespace bgc
