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

#include "bgc/graph.hpp"

#include <algorithm>
#include <string>

#include "bgc/errors.hpp"

namespace bgc {

namespace {

std::vector<char> mask_of(int n, std::span<const Vertex> allowed) {
  std::vector<char> mask(static_cast<std::size_t>(n), 0);
  for (Vertex v : allowed) {
    if (v < 0 || v >= n) {
      throw MalformedInputError("vertex " + std::to_string(v) +
                                " out of range");
    }
    mask[v] = 1;
  }
  return mask;
}

}  // namespace

Graph::Graph(int num_vertices, std::vector<Edge> edges)
    : n_(num_vertices), edges_(std::move(edges)) {
  if (n_ < 0) throw MalformedInputError("negative vertex count");
  adjacency_.resize(static_cast<std::size_t>(n_));
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto [u, v] = edges_[i];
    const auto index = static_cast<EdgeIndex>(i + 1);
    if (!contains(u) || !contains(v)) {
      throw MalformedInputError("edge " + std::to_string(index) +
                                " has an endpoint out of range");
    }
    if (u == v) {
      throw MalformedInputError(
          "self-loop at vertex " + std::to_string(u) +
          "; subdivide loops and parallel edges before loading");
    }
    if (!index_.emplace(key(u, v), index).second) {
      throw MalformedInputError(
          "parallel edge " + std::to_string(u) + "-" + std::to_string(v) +
          "; subdivide loops and parallel edges before loading");
    }
    adjacency_[u].push_back({v, index});
    adjacency_[v].push_back({u, index});
  }
}

std::uint64_t Graph::key(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

const Edge& Graph::edge(EdgeIndex i) const {
  if (i < 1 || i > num_edges()) {
    throw MalformedInputError("edge index " + std::to_string(i) +
                              " out of range");
  }
  return edges_[static_cast<std::size_t>(i - 1)];
}

std::span<const Incidence> Graph::incident(Vertex v) const {
  if (!contains(v)) {
    throw MalformedInputError("vertex " + std::to_string(v) +
                              " out of range");
  }
  return adjacency_[v];
}

std::optional<EdgeIndex> Graph::edge_between(Vertex u, Vertex v) const {
  auto it = index_.find(key(u, v));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool SimpleCycle::contains(Vertex v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

std::vector<Vertex> canonical_order(std::span<const Vertex> cyclic) {
  std::vector<Vertex> out(cyclic.begin(), cyclic.end());
  if (out.size() < 2) return out;
  auto min_it = std::min_element(out.begin(), out.end());
  std::rotate(out.begin(), min_it, out.end());
  if (out.back() < out[1]) std::reverse(out.begin() + 1, out.end());
  return out;
}

SimpleCycle make_cycle(const Graph& g, std::span<const Vertex> cyclic) {
  if (cyclic.size() < 3) {
    throw MalformedInputError("a simple cycle needs at least 3 vertices");
  }
  std::vector<char> seen(static_cast<std::size_t>(g.num_vertices()), 0);
  SimpleCycle c;
  c.vertices = canonical_order(cyclic);
  c.edges.reserve(c.vertices.size());
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    Vertex a = c.vertices[i];
    Vertex b = c.vertices[(i + 1) % c.vertices.size()];
    if (!g.contains(a)) {
      throw MalformedInputError("cycle vertex " + std::to_string(a) +
                                " out of range");
    }
    if (seen[a]++) {
      throw MalformedInputError("cycle repeats vertex " + std::to_string(a));
    }
    auto e = g.edge_between(a, b);
    if (!e) {
      throw MalformedInputError("cycle uses missing edge " +
                                std::to_string(a) + "-" + std::to_string(b));
    }
    c.edges.push_back(*e);
  }
  std::sort(c.edges.begin(), c.edges.end());
  return c;
}

bool is_simple_path(const Graph& g, const VertexPath& path) {
  if (path.vertices.empty()) return false;
  std::vector<char> seen(static_cast<std::size_t>(g.num_vertices()), 0);
  for (std::size_t i = 0; i < path.vertices.size(); ++i) {
    Vertex v = path.vertices[i];
    if (!g.contains(v) || seen[v]++) return false;
    if (i > 0 && !g.adjacent(path.vertices[i - 1], v)) return false;
  }
  return true;
}

VertexSet connected_component(const Graph& g, Vertex v,
                              std::span<const Vertex> allowed) {
  auto mask = mask_of(g.num_vertices(), allowed);
  if (!g.contains(v) || !mask[v]) {
    throw PreconditionError("connected_component: vertex " +
                            std::to_string(v) + " is not in the allowed set");
  }
  VertexSet out{v};
  mask[v] = 0;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& inc : g.incident(out[head])) {
      if (mask[inc.neighbor]) {
        mask[inc.neighbor] = 0;
        out.push_back(inc.neighbor);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g,
                                            std::span<const Vertex> allowed) {
  auto mask = mask_of(g.num_vertices(), allowed);
  std::vector<VertexSet> out;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (!mask[s]) continue;
    VertexSet comp{s};
    mask[s] = 0;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (const auto& inc : g.incident(comp[head])) {
        if (mask[inc.neighbor]) {
          mask[inc.neighbor] = 0;
          comp.push_back(inc.neighbor);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

VertexSet open_neighbourhood(const Graph& g, std::span<const Vertex> s) {
  auto inside = mask_of(g.num_vertices(), s);
  std::vector<char> hit(static_cast<std::size_t>(g.num_vertices()), 0);
  VertexSet out;
  for (Vertex v : s) {
    for (const auto& inc : g.incident(v)) {
      if (!inside[inc.neighbor] && !hit[inc.neighbor]) {
        hit[inc.neighbor] = 1;
        out.push_back(inc.neighbor);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct CycleWalker {
  const Graph& g;
  const std::vector<char>& allowed;
  std::size_t max_cycles;
  const std::function<bool(const std::vector<Vertex>&)>& visit;

  std::vector<Vertex> path;
  std::vector<char> on_path;
  std::size_t produced = 0;

  // Returns false once the visitor asked to stop.
  bool extend(Vertex start, Vertex cur) {
    for (const auto& inc : g.incident(cur)) {
      Vertex nb = inc.neighbor;
      if (nb == start) {
        if (path.size() >= 3 && path[1] < path.back()) {
          if (++produced > max_cycles) {
            throw LimitExceededError(
                "instance too large for generic enumeration: more than " +
                std::to_string(max_cycles) + " simple cycles");
          }
          if (!visit(path)) return false;
        }
        continue;
      }
      if (nb < start || !allowed[nb] || on_path[nb]) continue;
      path.push_back(nb);
      on_path[nb] = 1;
      bool keep_going = extend(start, nb);
      on_path[nb] = 0;
      path.pop_back();
      if (!keep_going) return false;
    }
    return true;
  }
};

}  // namespace

void for_each_simple_cycle(
    const Graph& g, std::span<const Vertex> allowed, std::size_t max_cycles,
    const std::function<bool(const std::vector<Vertex>&)>& visit) {
  std::vector<char> mask;
  if (allowed.empty()) {
    mask.assign(static_cast<std::size_t>(g.num_vertices()), 1);
  } else {
    mask = mask_of(g.num_vertices(), allowed);
  }
  CycleWalker walker{g, mask, max_cycles, visit, {}, {}, 0};
  walker.on_path.assign(static_cast<std::size_t>(g.num_vertices()), 0);
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (!mask[s]) continue;
    walker.path.assign(1, s);
    walker.on_path[s] = 1;
    bool keep_going = walker.extend(s, s);
    walker.on_path[s] = 0;
    if (!keep_going) return;
  }
}

std::vector<SimpleCycle> enumerate_simple_cycles(const Graph& g,
                                                 std::size_t max_cycles) {
  std::vector<SimpleCycle> out;
  for_each_simple_cycle(g, {}, max_cycles,
                        [&](const std::vector<Vertex>& cyc) {
                          out.push_back(make_cycle(g, cyc));
                          return true;
                        });
  return out;
}

std::optional<ClosedCycle> close_cycle(const Graph& g,
                                       const VertexPath& path_u,
                                       const VertexPath& path_v,
                                       EdgeIndex uv) {
  if (path_u.vertices.empty() || path_v.vertices.empty() ||
      path_u.front() != path_v.front()) {
    throw MalformedInputError("close_cycle: paths do not share a root");
  }
  if (!is_simple_path(g, path_u) || !is_simple_path(g, path_v)) {
    throw MalformedInputError("close_cycle: input is not a simple path");
  }
  const Edge& e = g.edge(uv);
  const Vertex u = path_u.back();
  const Vertex v = path_v.back();
  if (!((e.u == u && e.v == v) || (e.u == v && e.v == u))) {
    throw MalformedInputError("close_cycle: edge does not join path ends");
  }

  const auto& pu = path_u.vertices;
  const auto& pv = path_v.vertices;
  std::size_t common = 0;
  while (common < pu.size() && common < pv.size() && pu[common] == pv[common]) {
    ++common;
  }
  auto mask_u = mask_of(g.num_vertices(), pu);
  auto mask_v = mask_of(g.num_vertices(), pv);
  for (std::size_t i = common; i < pu.size(); ++i) {
    if (mask_v[pu[i]]) {
      throw MalformedInputError(
          "close_cycle: paths re-intersect after diverging");
    }
  }
  for (std::size_t i = common; i < pv.size(); ++i) {
    if (mask_u[pv[i]]) {
      throw MalformedInputError(
          "close_cycle: paths re-intersect after diverging");
    }
  }
  // One path may be a prefix of the other. The edge is then either the tree
  // edge itself or a shortcut from an ancestor, which closes a cycle whose
  // knot is that ancestor.
  if (pu.size() + pv.size() - 2 * common + 1 < 3) return std::nullopt;

  ClosedCycle out;
  out.knot = pu[common - 1];
  out.stem.vertices.assign(pu.begin(), pu.begin() + common);
  std::vector<Vertex> cyc{out.knot};
  cyc.insert(cyc.end(), pu.begin() + common, pu.end());
  cyc.insert(cyc.end(), pv.rbegin(), pv.rend() - common);
  out.cycle = make_cycle(g, cyc);
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g,
                                 std::span<const Vertex> vertices) {
  InducedSubgraph sub;
  sub.to_parent.assign(vertices.begin(), vertices.end());
  std::sort(sub.to_parent.begin(), sub.to_parent.end());
  sub.to_parent.erase(std::unique(sub.to_parent.begin(), sub.to_parent.end()),
                      sub.to_parent.end());
  sub.from_parent.assign(static_cast<std::size_t>(g.num_vertices()), -1);
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i) {
    Vertex p = sub.to_parent[i];
    if (!g.contains(p)) {
      throw MalformedInputError("induced_subgraph: vertex out of range");
    }
    sub.from_parent[p] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  sub.edge_to_parent.push_back(0);
  for (EdgeIndex i = 1; i <= g.num_edges(); ++i) {
    const Edge& e = g.edge(i);
    Vertex a = sub.from_parent[e.u];
    Vertex b = sub.from_parent[e.v];
    if (a < 0 || b < 0) continue;
    edges.push_back({a, b});
    sub.edge_to_parent.push_back(i);
  }
  sub.graph = Graph(static_cast<int>(sub.to_parent.size()), std::move(edges));
  return sub;
}

VertexSet make_vertex_set(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

bool set_contains(std::span<const Vertex> s, Vertex v) {
  return std::binary_search(s.begin(), s.end(), v);
}

VertexSet set_union(std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

VertexSet set_difference(std::span<const Vertex> a,
                         std::span<const Vertex> b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

VertexSet set_intersection(std::span<const Vertex> a,
                           std::span<const Vertex> b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

}  // namespace bgc
