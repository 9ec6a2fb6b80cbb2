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

#include "bgc/fpt.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <memory>
#include <numeric>
#include <string>
#include <utility>

#include "bgc/errors.hpp"
#include "bgc/fix_state.hpp"

namespace bgc {

SearchStats& SearchStats::operator+=(const SearchStats& other) {
  branch_nodes += other.branch_nodes;
  leaves += other.leaves;
  max_depth = std::max(max_depth, other.max_depth);
  lp_solves += other.lp_solves;
  lp_rounds += other.lp_rounds;
  oracle_queries += other.oracle_queries;
  return *this;
}

bool better_solution(const VertexSet& a, const VertexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool certify(const Graph& g, const BiasOracle& oracle, const VertexSet& x,
             const CertifyMode& mode) {
  const VertexSet deleted = make_vertex_set(x);
  for (Vertex v : deleted) {
    if (!g.contains(v)) {
      throw PreconditionError("vertex " + std::to_string(v) +
                              " is not in the graph");
    }
  }
  VertexSet all(static_cast<std::size_t>(g.num_vertices()));
  std::iota(all.begin(), all.end(), 0);
  const VertexSet rest = set_difference(all, deleted);
  if (const auto* local = std::get_if<LocalMode>(&mode)) {
    if (!g.contains(local->root)) throw PreconditionError("root out of range");
    if (set_contains(deleted, local->root)) {
      throw PreconditionError("the root cannot be deleted");
    }
    return is_balanced_subgraph(oracle, g,
                                connected_component(g, local->root, rest));
  }
  return is_balanced_subgraph(oracle, g, rest);
}

namespace {

VertexSet all_vertices(int n) {
  VertexSet all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  return all;
}

LocalSolution make_local_solution(const Graph& g, Vertex root,
                                  VertexSet deleted) {
  LocalSolution s;
  s.region = connected_component(
      g, root, set_difference(all_vertices(g.num_vertices()), deleted));
  s.deleted = std::move(deleted);
  return s;
}

// Hands out at most jobs - 1 helper threads across the whole search tree.
class WorkerBudget {
 public:
  explicit WorkerBudget(int jobs) : spare_(std::max(0, jobs - 1)) {}

  bool try_acquire() {
    int current = spare_.load();
    while (current > 0) {
      if (spare_.compare_exchange_weak(current, current - 1)) return true;
    }
    return false;
  }
  void release() { spare_.fetch_add(1); }

 private:
  std::atomic<int> spare_;
};

struct Outcome {
  std::optional<VertexSet> best;
  SearchStats stats;

  void absorb(Outcome&& child) {
    stats += child.stats;
    if (child.best && (!best || better_solution(*child.best, *best))) {
      best = std::move(child.best);
    }
  }
};

// Runs `first` on a helper thread when one is free and `second` inline.
// Results are combined in a fixed order, so the answer does not depend on
// scheduling.
template <typename First, typename Second>
void fork_join(WorkerBudget& workers, Outcome& out, First first,
               Second second) {
  if (workers.try_acquire()) {
    auto future = std::async(std::launch::async, [&workers, f = std::move(first)] {
      struct Release {
        WorkerBudget& w;
        ~Release() { w.release(); }
      } release{workers};
      return f();
    });
    Outcome b = second();
    out.absorb(future.get());
    out.absorb(std::move(b));
  } else {
    out.absorb(first());
    out.absorb(second());
  }
}

bool fix_conflict(const FixState& fix, const HalfIntegralCertificate& cert) {
  for (Vertex v : fix.fixed_zero) {
    if (cert.rounded[v] != 0) return true;
  }
  for (Vertex v : fix.fixed_one) {
    if (cert.rounded[v] == 0) return true;
  }
  return false;
}

VertexSet unfixed_halves(const FixState& fix,
                         const HalfIntegralCertificate& cert) {
  return set_difference(set_difference(cert.halves, fix.fixed_zero),
                        fix.fixed_one);
}

int remaining_budget(int budget, const FixState& fix) {
  return budget - static_cast<int>(fix.fixed_one.size());
}

// --- local search -----------------------------------------------------------

struct LocalContext {
  const Graph& g;
  const BiasOracle& oracle;
  Vertex root;
  int k;
  const SolverOptions& options;
  WorkerBudget& workers;
};

Outcome local_node(const LocalContext& ctx, FixState fix,
                   std::vector<BalloonConstraint> pool, std::size_t depth) {
  Outcome out;
  out.stats.branch_nodes = 1;
  out.stats.max_depth = depth;

  auto region = maximize_reachable_region(
      ctx.g, ctx.oracle, ctx.root, fix.base_costs, fix.fixed_zero,
      fix.fixed_one, ctx.options.lp, pool);
  out.stats.lp_solves = region.lp_solves;
  out.stats.lp_rounds = region.lp_rounds;
  fix.fixed_zero = std::move(region.fixed_zero);
  const HalfIntegralCertificate& cert = region.certificate;
  if (depth == 0) out.stats.lambda_root = cert.lambda;

  if (cert.lambda >= remaining_budget(ctx.k, fix) + half() ||
      fix_conflict(fix, cert)) {
    out.stats.leaves = 1;
    return out;
  }
  fix.fixed_zero = set_union(fix.fixed_zero,
                             set_difference(cert.reachable, fix.fixed_one));
  if (depth == 0 && ctx.options.root_persistence) {
    fix.fixed_one = set_union(fix.fixed_one, cert.ones);
    if (remaining_budget(ctx.k, fix) < 0) {
      out.stats.leaves = 1;
      return out;
    }
  }

  const VertexSet open = unfixed_halves(fix, cert);
  if (open.empty()) {
    out.stats.leaves = 1;
    VertexSet x = set_union(cert.ones, cert.halves);
    if (static_cast<int>(x.size()) <= ctx.k) {
      if (!certify(ctx.g, ctx.oracle, x, LocalMode{ctx.root})) {
        throw InternalConsistencyError(
            "the boundary of the reachable region is not a solution");
      }
      out.best = std::move(x);
    }
    return out;
  }

  const Vertex v = open.front();
  const bool can_delete = remaining_budget(ctx.k, fix) >= 1;
  auto delete_branch = [&ctx, fix, pool, v, can_delete, depth] {
    if (!can_delete) return Outcome{};
    FixState child = fix;
    child.fixed_one = set_union(child.fixed_one, VertexSet{v});
    return local_node(ctx, std::move(child), pool, depth + 1);
  };
  auto keep_branch = [&ctx, &fix, &pool, v, depth] {
    FixState child = fix;
    child.fixed_zero = set_union(child.fixed_zero, VertexSet{v});
    return local_node(ctx, std::move(child), pool, depth + 1);
  };
  fork_join(ctx.workers, out, delete_branch, keep_branch);
  return out;
}

// --- global search ----------------------------------------------------------

// An unbalanced component of the residual graph with its own dense ids.
struct Tile {
  InducedSubgraph sub;
  RestrictedOracle oracle;

  Tile(const Graph& g, const BiasOracle& parent, const VertexSet& component)
      : sub(induced_subgraph(g, component)),
        oracle(parent, g, sub.to_parent) {}
};

struct GlobalContext {
  const Graph& g;
  const BiasOracle& oracle;
  const SolverOptions& options;
  WorkerBudget& workers;
};

Outcome tile_node(const GlobalContext& ctx, std::shared_ptr<const Tile> tile,
                  VertexSet alive, VertexSet committed, int budget,
                  FixState fix, std::vector<BalloonConstraint> pool,
                  std::size_t depth);

Outcome search_node(const GlobalContext& ctx, VertexSet alive,
                    VertexSet committed, int budget, std::size_t depth) {
  Outcome out;
  out.stats.branch_nodes = 1;
  out.stats.max_depth = depth;
  if (budget < 0) {
    out.stats.leaves = 1;
    return out;
  }

  std::shared_ptr<const Tile> target;
  for (const VertexSet& component : connected_components(ctx.g, alive)) {
    if (component.size() < 3) continue;
    auto tile = std::make_shared<const Tile>(ctx.g, ctx.oracle, component);
    const auto zero = FractionalAssignment::zero(tile->sub.graph.num_vertices(), 0);
    if (separate(tile->sub.graph, tile->oracle, zero)) {
      target = std::move(tile);
      break;
    }
  }
  if (!target) {
    out.stats.leaves = 1;
    out.best = std::move(committed);
    return out;
  }
  if (budget == 0) {
    out.stats.leaves = 1;
    return out;
  }

  const Vertex v0 = target->sub.to_parent.front();
  auto delete_branch = [&ctx, &alive, &committed, v0, budget, depth] {
    return search_node(ctx, set_difference(alive, VertexSet{v0}),
                       set_union(committed, VertexSet{v0}), budget - 1,
                       depth + 1);
  };
  auto keep_branch = [&ctx, &alive, &committed, target, budget, depth] {
    const int n = target->sub.graph.num_vertices();
    FixState fix{VertexSet{0}, {}, unit_costs(n)};
    return tile_node(ctx, target, alive, committed, budget, std::move(fix), {},
                     depth + 1);
  };
  fork_join(ctx.workers, out, delete_branch, keep_branch);
  return out;
}

Outcome tile_node(const GlobalContext& ctx, std::shared_ptr<const Tile> tile,
                  VertexSet alive, VertexSet committed, int budget,
                  FixState fix, std::vector<BalloonConstraint> pool,
                  std::size_t depth) {
  Outcome out;
  out.stats.branch_nodes = 1;
  out.stats.max_depth = depth;
  const Graph& sg = tile->sub.graph;

  auto region = maximize_reachable_region(sg, tile->oracle, 0, fix.base_costs,
                                          fix.fixed_zero, fix.fixed_one,
                                          ctx.options.lp, pool);
  out.stats.lp_solves = region.lp_solves;
  out.stats.lp_rounds = region.lp_rounds;
  fix.fixed_zero = std::move(region.fixed_zero);
  const HalfIntegralCertificate& cert = region.certificate;
  if (cert.lambda >= remaining_budget(budget, fix) + half() ||
      fix_conflict(fix, cert)) {
    out.stats.leaves = 1;
    return out;
  }

  fix.fixed_zero = set_union(fix.fixed_zero, cert.reachable);
  fix.fixed_one = set_union(fix.fixed_one, cert.ones);
  if (remaining_budget(budget, fix) < 0) {
    out.stats.leaves = 1;
    return out;
  }

  const VertexSet zone = connected_component(sg, 0, fix.fixed_zero);
  const VertexSet boundary = open_neighbourhood(sg, zone);
  if (std::includes(fix.fixed_one.begin(), fix.fixed_one.end(),
                    boundary.begin(), boundary.end())) {
    if (!certify(sg, tile->oracle, boundary, LocalMode{0})) {
      throw InternalConsistencyError("committed region is not balanced");
    }
    // to_parent is increasing, so mapped sets stay sorted.
    VertexSet removed;
    VertexSet cut;
    for (Vertex v : set_union(zone, boundary)) {
      removed.push_back(tile->sub.to_parent[v]);
    }
    for (Vertex v : boundary) cut.push_back(tile->sub.to_parent[v]);
    const int next_budget = budget - static_cast<int>(cut.size());
    out.absorb(search_node(ctx, set_difference(alive, removed),
                           set_union(committed, cut), next_budget, depth + 1));
    return out;
  }

  const VertexSet open = unfixed_halves(fix, cert);
  if (open.empty()) {
    throw InternalConsistencyError(
        "region is not enclosed by deletions but no branching vertex remains");
  }
  const Vertex v = open.front();
  const bool can_delete = remaining_budget(budget, fix) >= 1;
  auto delete_branch = [&ctx, tile, &alive, &committed, budget, fix, pool, v,
                        can_delete, depth] {
    if (!can_delete) return Outcome{};
    FixState child = fix;
    child.fixed_one = set_union(child.fixed_one, VertexSet{v});
    return tile_node(ctx, tile, alive, committed, budget, std::move(child),
                     pool, depth + 1);
  };
  auto keep_branch = [&ctx, tile, &alive, &committed, budget, &fix, &pool, v,
                      depth] {
    FixState child = fix;
    child.fixed_zero = set_union(child.fixed_zero, VertexSet{v});
    return tile_node(ctx, tile, alive, committed, budget, std::move(child),
                     pool, depth + 1);
  };
  fork_join(ctx.workers, out, delete_branch, keep_branch);
  return out;
}

}  // namespace

ApproxResult approximate_local(const Graph& g, const BiasOracle& oracle,
                               Vertex root, std::span<const Rational> costs,
                               const LpOptions& options) {
  ensure_linear(oracle, g);
  auto lp = solve_local_lp(g, oracle, root, costs, options);
  ApproxResult result;
  result.certificate = round_half_integral(g, oracle, lp.x, lp.lambda, costs);
  if (options.on_certificate) {
    options.on_certificate(g, oracle, result.certificate, costs);
  }
  result.lambda = lp.lambda;
  VertexSet x = set_union(result.certificate.ones, result.certificate.halves);
  result.cost = 0;
  for (Vertex v : x) result.cost += costs[v];
  if (!certify(g, oracle, x, LocalMode{root})) {
    throw InternalConsistencyError("approximate solution is not feasible");
  }
  result.solution = make_local_solution(g, root, std::move(x));
  return result;
}

LocalResult solve_local(const Graph& g, const BiasOracle& oracle, Vertex root,
                        int k, const SolverOptions& options) {
  if (!g.contains(root)) throw PreconditionError("root out of range");
  if (k < 0) throw PreconditionError("budget must be non-negative");
  ensure_linear(oracle, g);
  const int n = g.num_vertices();
  WorkerBudget workers(options.jobs);
  LocalContext ctx{g, oracle, root, std::min(k, n - 1), options, workers};

  const auto queries_before = oracle.query_count();
  Outcome out = local_node(ctx, FixState{{}, {}, unit_costs(n)}, {}, 0);
  LocalResult result;
  result.stats = out.stats;
  result.stats.oracle_queries = oracle.query_count() - queries_before;
  if (out.best) result.solution = make_local_solution(g, root, *out.best);
  return result;
}

GlobalResult solve_global(const Graph& g, const BiasOracle& oracle, int k,
                          const SolverOptions& options) {
  if (k < 0) throw PreconditionError("budget must be non-negative");
  ensure_linear(oracle, g);
  const int n = g.num_vertices();
  WorkerBudget workers(options.jobs);
  GlobalContext ctx{g, oracle, options, workers};

  const auto queries_before = oracle.query_count();
  Outcome out = search_node(ctx, all_vertices(n), {}, std::min(k, n), 0);
  GlobalResult result;
  result.stats = out.stats;
  result.stats.oracle_queries = oracle.query_count() - queries_before;
  if (out.best) {
    if (!certify(g, oracle, *out.best, GlobalMode{})) {
      throw InternalConsistencyError("global solution is not balanced");
    }
    result.solution = GlobalSolution{*out.best};
  }
  return result;
}

}  // namespace bgc
