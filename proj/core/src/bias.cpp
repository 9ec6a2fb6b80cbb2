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

#include "bgc/bias.hpp"

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <unordered_map>

namespace bgc {

bool BiasOracle::is_balanced(const Graph& g, const SimpleCycle& c) const {
  const auto& vs = c.vertices;
  if (vs.size() < 3) {
    throw MalformedInputError("cycle has fewer than 3 vertices");
  }
  for (std::size_t i = 0; i < vs.size(); ++i) {
    Vertex a = vs[i];
    Vertex b = vs[(i + 1) % vs.size()];
    if (!g.contains(a) || !g.contains(b) || !g.adjacent(a, b)) {
      throw MalformedInputError("cycle is not in the graph: missing edge " +
                                std::to_string(a) + "-" + std::to_string(b));
    }
  }
  ++queries_;
  std::vector<Vertex> key = canonical_order(vs);
  {
    std::lock_guard lock(memo_mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  ++evaluations_;
  const bool balanced = evaluate(g, c);
  std::lock_guard lock(memo_mutex_);
  memo_.insert_or_assign(std::move(key), balanced);
  return balanced;
}

bool BiasOracle::fast_balanced_subgraph(const Graph&,
                                        std::span<const Vertex>) const {
  throw PreconditionError("oracle '" + name() +
                          "' has no fast balanced-subgraph test");
}

ColourOracle::ColourOracle(const Graph& g, std::vector<int> colours)
    : colours_(std::move(colours)) {
  if (colours_.size() != static_cast<std::size_t>(g.num_edges()) + 1) {
    throw MalformedInputError("colour bias must colour every edge");
  }
}

bool ColourOracle::evaluate(const Graph&, const SimpleCycle& c) const {
  const int first = colours_[c.edges.front()];
  return std::all_of(c.edges.begin(), c.edges.end(),
                     [&](EdgeIndex e) { return colours_[e] == first; });
}

PartitionOracle::PartitionOracle(const Graph& g, Vertex root,
                                 std::map<Vertex, int> terminal_class)
    : root_(root), classes_(std::move(terminal_class)) {
  if (!g.contains(root)) {
    throw MalformedInputError("partition root out of range");
  }
  for (const auto& inc : g.incident(root)) {
    if (!classes_.contains(inc.neighbor)) {
      throw MalformedInputError("partition bias: neighbour " +
                                std::to_string(inc.neighbor) +
                                " of the root has no terminal class");
    }
  }
  for (const auto& [v, cls] : classes_) {
    if (!g.contains(v) || !g.adjacent(root, v)) {
      throw MalformedInputError("partition bias: class vertex " +
                                std::to_string(v) +
                                " is not a neighbour of the root");
    }
  }
}

bool PartitionOracle::evaluate(const Graph&, const SimpleCycle& c) const {
  const auto& vs = c.vertices;
  auto it = std::find(vs.begin(), vs.end(), root_);
  if (it == vs.end()) return true;
  const std::size_t pos = static_cast<std::size_t>(it - vs.begin());
  const Vertex prev = vs[(pos + vs.size() - 1) % vs.size()];
  const Vertex next = vs[(pos + 1) % vs.size()];
  return classes_.at(prev) == classes_.at(next);
}

bool RestrictedOracle::evaluate(const Graph&, const SimpleCycle& c) const {
  std::vector<Vertex> mapped;
  mapped.reserve(c.vertices.size());
  for (Vertex v : c.vertices) mapped.push_back(to_parent_[v]);
  return parent_.is_balanced(parent_graph_, make_cycle(parent_graph_, mapped));
}

bool RestrictedOracle::fast_balanced_subgraph(const Graph&,
                                              std::span<const Vertex> s) const {
  std::vector<Vertex> mapped;
  mapped.reserve(s.size());
  for (Vertex v : s) mapped.push_back(to_parent_[v]);
  return parent_.fast_balanced_subgraph(parent_graph_, mapped);
}

bool is_balanced_cycle(const BiasOracle& oracle, const Graph& g,
                       const SimpleCycle& c) {
  return oracle.is_balanced(g, c);
}

bool is_balanced_subgraph_generic(const BiasOracle& oracle, const Graph& g,
                                  std::span<const Vertex> s,
                                  std::size_t max_cycles) {
  if (s.empty()) return true;
  bool balanced = true;
  for_each_simple_cycle(g, s, max_cycles, [&](const std::vector<Vertex>& cyc) {
    if (!oracle.is_balanced(g, make_cycle(g, cyc))) balanced = false;
    return balanced;
  });
  return balanced;
}

bool is_balanced_subgraph(const BiasOracle& oracle, const Graph& g,
                          std::span<const Vertex> s, std::size_t max_cycles) {
  if (s.empty()) return true;
  if (oracle.has_fast_balanced_subgraph()) {
    return oracle.fast_balanced_subgraph(g, s);
  }
  return is_balanced_subgraph_generic(oracle, g, s, max_cycles);
}

namespace {

struct PathRecord {
  std::vector<Vertex> vertices;
  std::uint64_t interior = 0;
};

void collect_paths(const Graph& g, Vertex target, std::vector<Vertex>& path,
                   std::uint64_t& on_path, std::vector<PathRecord>& out,
                   std::size_t& budget) {
  const Vertex cur = path.back();
  for (const auto& inc : g.incident(cur)) {
    const Vertex nb = inc.neighbor;
    if (nb == target) {
      if (budget == 0) {
        throw LimitExceededError(
            "instance too large for theta enumeration: too many paths");
      }
      --budget;
      PathRecord rec;
      rec.vertices = path;
      rec.vertices.push_back(target);
      rec.interior = on_path & ~(std::uint64_t{1} << path.front());
      out.push_back(std::move(rec));
      continue;
    }
    if (on_path & (std::uint64_t{1} << nb)) continue;
    path.push_back(nb);
    on_path |= std::uint64_t{1} << nb;
    collect_paths(g, target, path, on_path, out, budget);
    on_path &= ~(std::uint64_t{1} << nb);
    path.pop_back();
  }
}

// Cycle formed by two internally disjoint a-b paths.
std::vector<Vertex> join_paths(const std::vector<Vertex>& p,
                               const std::vector<Vertex>& q) {
  std::vector<Vertex> cyc(p.begin(), p.end());
  for (std::size_t i = q.size() - 2; i >= 1; --i) cyc.push_back(q[i]);
  return cyc;
}

}  // namespace

LinearityReport validate_linearity(const BiasOracle& oracle, const Graph& g,
                                   std::size_t max_paths) {
  if (g.num_vertices() > 64) {
    throw LimitExceededError(
        "instance too large for theta enumeration: more than 64 vertices");
  }
  LinearityReport report;
  std::size_t budget = max_paths;
  for (Vertex a = 0; a < g.num_vertices(); ++a) {
    for (Vertex b = a + 1; b < g.num_vertices(); ++b) {
      if (g.degree(a) < 3 || g.degree(b) < 3) continue;
      std::vector<PathRecord> paths;
      std::vector<Vertex> prefix{a};
      std::uint64_t on_path = std::uint64_t{1} << a;
      collect_paths(g, b, prefix, on_path, paths, budget);
      const std::size_t p = paths.size();
      std::unordered_map<std::uint64_t, bool> balanced_cache;
      auto balanced = [&](std::size_t i, std::size_t j) {
        const std::uint64_t key = static_cast<std::uint64_t>(i) * p + j;
        auto it = balanced_cache.find(key);
        if (it != balanced_cache.end()) return it->second;
        const bool value = oracle.is_balanced(
            g, make_cycle(g, join_paths(paths[i].vertices, paths[j].vertices)));
        balanced_cache.emplace(key, value);
        return value;
      };
      for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = i + 1; j < p; ++j) {
          if (paths[i].interior & paths[j].interior) continue;
          // Two direct a-b edges cannot exist, so the pair spans a cycle.
          for (std::size_t l = j + 1; l < p; ++l) {
            if ((paths[l].interior & paths[i].interior) ||
                (paths[l].interior & paths[j].interior)) {
              continue;
            }
            ++report.thetas_checked;
            const std::array<bool, 3> flags{balanced(j, l), balanced(i, l),
                                            balanced(i, j)};
            const int count = flags[0] + flags[1] + flags[2];
            if (count != 2) continue;
            Theta theta;
            theta.a = a;
            theta.b = b;
            const std::array<std::size_t, 3> ids{i, j, l};
            for (int t = 0; t < 3; ++t) {
              theta.paths[t].vertices = paths[ids[t]].vertices;
            }
            theta.cycles[0] = make_cycle(
                g, join_paths(paths[j].vertices, paths[l].vertices));
            theta.cycles[1] = make_cycle(
                g, join_paths(paths[i].vertices, paths[l].vertices));
            theta.cycles[2] = make_cycle(
                g, join_paths(paths[i].vertices, paths[j].vertices));
            theta.balanced = flags;
            report.counterexample = std::move(theta);
            return report;
          }
        }
      }
    }
  }
  return report;
}

void ensure_linear(const BiasOracle& oracle, const Graph& g) {
  if (oracle.known_linear()) return;
  if (g.num_vertices() <= kLinearityCheckMaxVertices) {
    auto report = validate_linearity(oracle, g);
    if (!report.ok()) {
      throw PreconditionError("oracle '" + oracle.name() +
                              "' is not linear: a theta between vertices " +
                              std::to_string(report.counterexample->a) +
                              " and " +
                              std::to_string(report.counterexample->b) +
                              " has exactly two balanced cycles");
    }
    return;
  }
  std::clog << "warning: oracle '" << oracle.name()
            << "' is not known to be linear and the graph is too large to "
               "check; results are only guaranteed for linear classes\n";
}

}  // namespace bgc
