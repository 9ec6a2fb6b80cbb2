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

#ifndef BGC_GRAPH_HPP_
#define BGC_GRAPH_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace bgc {

// Vertices are dense ids 0..n-1.
using Vertex = int;

// Edges are indexed 1..m in input order. The index doubles as the
// perturbation exponent of the separation oracle, so it must never change
// for the lifetime of a graph.
using EdgeIndex = int;

// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;

inline constexpr std::size_t kDefaultCycleLimit = 1'000'000;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  Vertex neighbor = 0;
  EdgeIndex edge = 0;
};

// Simple undirected graph. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  // Throws MalformedInputError on self-loops, parallel edges or endpoints
  // out of range. Multigraphs have to be subdivided by the caller.
  explicit Graph(int num_vertices, std::vector<Edge> edges = {});

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  // 1-based.
  const Edge& edge(EdgeIndex i) const;
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const Incidence> incident(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(incident(v).size()); }

  std::optional<EdgeIndex> edge_between(Vertex u, Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const {
    return edge_between(u, v).has_value();
  }

  bool contains(Vertex v) const { return v >= 0 && v < n_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  static std::uint64_t key(Vertex u, Vertex v);

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::unordered_map<std::uint64_t, EdgeIndex> index_;
};

struct VertexPath {
  std::vector<Vertex> vertices;

  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  std::size_t size() const { return vertices.size(); }

  friend bool operator==(const VertexPath&, const VertexPath&) = default;
};

// A simple cycle in canonical form: smallest vertex first, then the direction
// whose second vertex is smaller. `edges` holds the sorted edge indices.
struct SimpleCycle {
  std::vector<Vertex> vertices;
  std::vector<EdgeIndex> edges;

  std::size_t length() const { return vertices.size(); }
  bool contains(Vertex v) const;

  friend bool operator==(const SimpleCycle& a, const SimpleCycle& b) {
    return a.vertices == b.vertices;
  }
  friend auto operator<=>(const SimpleCycle& a, const SimpleCycle& b) {
    return a.vertices <=> b.vertices;
  }
};

// Rotates and orients a cyclic vertex sequence into canonical order. Does not
// check adjacency.
std::vector<Vertex> canonical_order(std::span<const Vertex> cyclic);

// Builds a canonical SimpleCycle from any rotation/direction of a cyclic
// vertex sequence. Throws MalformedInputError if the sequence is not a simple
// cycle of g.
SimpleCycle make_cycle(const Graph& g, std::span<const Vertex> cyclic);

bool is_simple_path(const Graph& g, const VertexPath& path);

// Maximal connected subset of `allowed` containing v, using only edges with
// both endpoints in `allowed`. Throws PreconditionError if v is not allowed.
VertexSet connected_component(const Graph& g, Vertex v,
                              std::span<const Vertex> allowed);

// All connected components of G[allowed], each sorted, ordered by their
// smallest vertex.
std::vector<VertexSet> connected_components(const Graph& g,
                                            std::span<const Vertex> allowed);

// Open neighbourhood N(S) = vertices outside S adjacent to S.
VertexSet open_neighbourhood(const Graph& g, std::span<const Vertex> s);

// Invokes `visit` once per simple cycle of G[allowed] (all of g when
// `allowed` is empty), passing the canonical vertex order. Stops early when
// `visit` returns false. Throws LimitExceededError once more than
// `max_cycles` cycles have been produced.
void for_each_simple_cycle(
    const Graph& g, std::span<const Vertex> allowed, std::size_t max_cycles,
    const std::function<bool(const std::vector<Vertex>&)>& visit);

std::vector<SimpleCycle> enumerate_simple_cycles(
    const Graph& g, std::size_t max_cycles = kDefaultCycleLimit);

// Result of joining two root paths with an edge: the cycle, the stem from the
// root to the knot vertex, and the knot itself.
struct ClosedCycle {
  SimpleCycle cycle;
  VertexPath stem;
  Vertex knot = 0;
};

// path_u and path_v start at a common root and end at the endpoints of edge
// `uv`. Returns nullopt when `uv` is the last edge of one of the paths. If one
// endpoint lies further up the other path, the cycle runs from that endpoint
// down the longer path and back over `uv`, with the endpoint as knot. Throws
// MalformedInputError if the paths do not share a root, re-intersect after
// diverging, or `uv` does not join their endpoints.
std::optional<ClosedCycle> close_cycle(const Graph& g,
                                       const VertexPath& path_u,
                                       const VertexPath& path_v, EdgeIndex uv);

// G[vertices] with dense ids. Edge order follows the parent's order.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;       // local id -> parent id
  std::vector<Vertex> from_parent;     // parent id -> local id or -1
  std::vector<EdgeIndex> edge_to_parent;  // 1-based local index -> parent;
                                          // entry 0 unused
};

InducedSubgraph induced_subgraph(const Graph& g,
                                 std::span<const Vertex> vertices);

// Helpers for sorted vertex sets.
VertexSet make_vertex_set(std::vector<Vertex> vertices);
bool set_contains(std::span<const Vertex> s, Vertex v);
VertexSet set_union(std::span<const Vertex> a, std::span<const Vertex> b);
VertexSet set_difference(std::span<const Vertex> a,
                         std::span<const Vertex> b);
VertexSet set_intersection(std::span<const Vertex> a,
                           std::span<const Vertex> b);

}  // namespace bgc

#endif  // BGC_GRAPH_HPP_
