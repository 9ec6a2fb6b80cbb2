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

#include "bgc/reductions.hpp"

#include <map>
#include <string>

namespace bgc {

RootedInstance build_apex_instance(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<Edge> edges = g.edges();
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, n});
  RootedInstance out;
  out.graph = Graph(n + 1, std::move(edges));
  out.root = n;
  out.oracle = std::make_shared<EmptyBias>();
  return out;
}

MultiwayInstance build_multiway_instance(const Graph& g,
                                         std::span<const Vertex> terminals,
                                         std::span<const int> multiplicities) {
  const int n = g.num_vertices();
  if (!multiplicities.empty() && multiplicities.size() != terminals.size()) {
    throw PreconditionError("one multiplicity per terminal is required");
  }
  std::vector<char> is_terminal(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < terminals.size(); ++i) {
    const Vertex t = terminals[i];
    if (!g.contains(t)) throw PreconditionError("terminal out of range");
    if (is_terminal[t]++) {
      throw PreconditionError("terminal " + std::to_string(t) + " repeated");
    }
    if (g.degree(t) == 0) {
      throw PreconditionError("terminal " + std::to_string(t) +
                              " has degree 0 and cannot be duplicated");
    }
    if (!multiplicities.empty() && multiplicities[i] != g.degree(t)) {
      throw PreconditionError("terminal " + std::to_string(t) +
                              ": only d(t) = deg(t) copies are supported");
    }
  }

  MultiwayInstance out;
  out.vertex_map.assign(static_cast<std::size_t>(n), -1);
  Vertex next = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (!is_terminal[v]) out.vertex_map[v] = next++;
  }
  // copy_of[e][side] for terminal endpoints of edge e.
  std::map<std::pair<EdgeIndex, Vertex>, Vertex> copy_of;
  for (Vertex t : terminals) {
    for (const auto& inc : g.incident(t)) {
      copy_of[{inc.edge, t}] = next;
      out.copy_origin.resize(static_cast<std::size_t>(next) + 1, -1);
      out.copy_origin[next] = t;
      ++next;
    }
  }
  const Vertex root = next++;
  out.copy_origin.resize(static_cast<std::size_t>(next), -1);

  auto image = [&](EdgeIndex e, Vertex v) {
    return is_terminal[v] ? copy_of.at({e, v}) : out.vertex_map[v];
  };
  std::vector<Edge> edges;
  for (EdgeIndex e = 1; e <= g.num_edges(); ++e) {
    const Edge& old = g.edge(e);
    edges.push_back({image(e, old.u), image(e, old.v)});
  }
  std::map<Vertex, int> classes;
  for (Vertex c = 0; c < root; ++c) {
    if (out.copy_origin[c] >= 0) {
      edges.push_back({c, root});
      classes[c] = out.copy_origin[c];
    }
  }
  out.graph = Graph(next, std::move(edges));
  out.root = root;
  out.oracle =
      std::make_shared<PartitionOracle>(out.graph, root, std::move(classes));
  return out;
}

}  // namespace bgc
