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

#include "bgc/brute.hpp"

#include <functional>
#include <string>
#include <tuple>

#include "bgc/errors.hpp"
#include "bgc/fpt.hpp"

namespace bgc {
namespace {

void check_size(const Graph& g, int max_vertices) {
  if (g.num_vertices() > max_vertices) {
    throw LimitExceededError("brute force is limited to " +
                             std::to_string(max_vertices) + " vertices");
  }
}

// Calls visit(subset) for every subset of `pool` of the given size in
// lexicographic order until it returns true.
bool for_each_subset(const VertexSet& pool, int size,
                     const std::function<bool(const VertexSet&)>& visit) {
  VertexSet current;
  std::function<bool(std::size_t)> rec = [&](std::size_t start) {
    if (static_cast<int>(current.size()) == size) return visit(current);
    const std::size_t need = size - current.size();
    for (std::size_t i = start; i + need <= pool.size(); ++i) {
      current.push_back(pool[i]);
      if (rec(i + 1)) return true;
      current.pop_back();
    }
    return false;
  };
  return rec(0);
}

BruteResult smallest_certified(const Graph& g, const BiasOracle& oracle,
                               const VertexSet& candidates,
                               const CertifyMode& mode) {
  for (int size = 0; size <= static_cast<int>(candidates.size()); ++size) {
    BruteResult result;
    if (for_each_subset(candidates, size, [&](const VertexSet& x) {
          if (!certify(g, oracle, x, mode)) return false;
          result.optimum = size;
          result.witness = x;
          return true;
        })) {
      return result;
    }
  }
  throw InternalConsistencyError("no subset certifies, not even all vertices");
}

VertexSet vertices_except(int n, std::optional<Vertex> skip) {
  VertexSet out;
  for (Vertex v = 0; v < n; ++v) {
    if (v != skip) out.push_back(v);
  }
  return out;
}

}  // namespace

BruteResult brute_local(const Graph& g, const BiasOracle& oracle, Vertex root,
                        int max_vertices) {
  check_size(g, max_vertices);
  if (!g.contains(root)) throw PreconditionError("root out of range");
  return smallest_certified(g, oracle, vertices_except(g.num_vertices(), root),
                            LocalMode{root});
}

BruteResult brute_global(const Graph& g, const BiasOracle& oracle,
                         int max_vertices) {
  check_size(g, max_vertices);
  return smallest_certified(g, oracle,
                            vertices_except(g.num_vertices(), std::nullopt),
                            GlobalMode{});
}

WeightedBruteResult brute_local_weighted(const Graph& g,
                                         const BiasOracle& oracle, Vertex root,
                                         std::span<const Rational> costs,
                                         int max_vertices) {
  check_size(g, max_vertices);
  if (!g.contains(root)) throw PreconditionError("root out of range");
  if (costs.size() != static_cast<std::size_t>(g.num_vertices())) {
    throw PreconditionError("one cost per vertex is required");
  }
  const VertexSet candidates = vertices_except(g.num_vertices(), root);
  std::optional<WeightedBruteResult> best;
  for (int size = 0; size <= static_cast<int>(candidates.size()); ++size) {
    for_each_subset(candidates, size, [&](const VertexSet& x) {
      Rational cost = 0;
      for (Vertex v : x) cost += costs[v];
      if (best && cost >= best->optimum) return false;
      if (certify(g, oracle, x, LocalMode{root})) best = {cost, x};
      return false;
    });
  }
  return *best;
}

std::optional<BruteBalloon> brute_min_balloon(const Graph& g,
                                              const BiasOracle& oracle,
                                              const FractionalAssignment& x,
                                              int max_vertices) {
  check_size(g, max_vertices);
  x.validate(g);
  const Vertex root = x.root;
  std::optional<BruteBalloon> best;

  auto consider = [&](const SimpleCycle& cycle, const VertexPath& path,
                      Vertex knot) {
    Balloon b{path, cycle, knot};
    Rational w = BalloonConstraint::from_balloon(b).weight(x);
    if (best) {
      auto lhs = std::tie(w, cycle.vertices, path.vertices);
      auto rhs = std::tie(best->weight, best->balloon.cycle.vertices,
                          best->balloon.path.vertices);
      if (!(lhs < rhs)) return;
    }
    best = BruteBalloon{std::move(b), std::move(w)};
  };

  for_each_simple_cycle(g, {}, kDefaultCycleLimit,
                        [&](const std::vector<Vertex>& order) {
    SimpleCycle cycle = make_cycle(g, order);
    if (oracle.is_balanced(g, cycle)) return true;
    if (cycle.contains(root)) {
      consider(cycle, VertexPath{{root}}, root);
      return true;
    }
    // Every simple root path whose only cycle vertex is its last one.
    std::vector<char> used(static_cast<std::size_t>(g.num_vertices()), 0);
    VertexPath path{{root}};
    used[root] = 1;
    std::function<void(Vertex)> extend = [&](Vertex u) {
      for (const auto& inc : g.incident(u)) {
        const Vertex w = inc.neighbor;
        if (used[w]) continue;
        path.vertices.push_back(w);
        if (cycle.contains(w)) {
          consider(cycle, path, w);
        } else {
          used[w] = 1;
          extend(w);
          used[w] = 0;
        }
        path.vertices.pop_back();
      }
    };
    extend(root);
    return true;
  });
  return best;
}

}  // namespace bgc
