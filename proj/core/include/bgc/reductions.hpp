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

#ifndef BGC_REDUCTIONS_HPP_
#define BGC_REDUCTIONS_HPP_

#include <span>
#include <vector>

#include "bgc/bias.hpp"
#include "bgc/graph.hpp"

namespace bgc {

struct RootedInstance {
  Graph graph;
  Vertex root = 0;
  OraclePtr oracle;
};

// g plus an apex vertex (id n) adjacent to everything, with empty bias. The
// rooted problem on the result is Vertex Cover of g.
RootedInstance build_apex_instance(const Graph& g);

struct MultiwayInstance : RootedInstance {
  // copy_origin[c] is the original terminal of vertex c of the new graph, or
  // -1 for non-copies.
  std::vector<Vertex> copy_origin;
  // new id of every non-terminal vertex of g, -1 for terminals.
  std::vector<Vertex> vertex_map;
};

// Replaces each terminal t by deg(t) copies, each inheriting one incident
// edge, and adds a root adjacent to all copies with a PartitionOracle mapping
// each copy to its terminal. Non-terminals keep their relative order, copies
// follow, the root is the last vertex. `multiplicities`, when given, must be
// parallel to `terminals` and equal to the degrees. Throws PreconditionError
// for isolated terminals, duplicates, or other multiplicities.
MultiwayInstance build_multiway_instance(const Graph& g,
                                         std::span<const Vertex> terminals,
                                         std::span<const int> multiplicities = {});

}  // namespace bgc

#endif  // BGC_REDUCTIONS_HPP_
