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

#ifndef BGC_TESTS_SUPPORT_REFERENCE_HPP_
#define BGC_TESTS_SUPPORT_REFERENCE_HPP_

// Reference computations that share no code with the library beyond the
// Graph container. Everything here is deliberately naive.

#include <cstdint>
#include <optional>
#include <vector>

#include "bgc/generators.hpp"
#include "bgc/graph.hpp"
#include "bgc/instance.hpp"
#include "bgc/local_lp.hpp"
#include "bgc/rational.hpp"

namespace bgc::testing {

// Counts simple cycles as the number of Hamiltonian cycles of G[S] summed
// over all vertex subsets S with |S| >= 3.
std::size_t count_cycles_by_subsets(const Graph& g);

// Minimum vertex cover by subset enumeration.
int min_vertex_cover(const Graph& g);

// Minimum feedback vertex set; acyclicity via union-find.
int min_feedback_vertex_set(const Graph& g);

// Minimum odd cycle transversal; bipartiteness via 2-colouring.
int min_odd_cycle_transversal(const Graph& g);

// Minimum number of non-terminal vertices plus terminal-incident edges whose
// removal separates s from t (Menger, via max-flow on the split graph).
int min_mixed_st_cut(const Graph& g, Vertex s, Vertex t);

// Same quantity by exhaustive enumeration over vertex and edge subsets.
int min_mixed_st_cut_brute(const Graph& g, Vertex s, Vertex t);

// Plain shortest-path distances under l_x(uv) = (x_u + x_v)/2 by repeated
// relaxation. nullopt for unreachable vertices.
std::vector<std::optional<Rational>> plain_distances(
    const Graph& g, const FractionalAssignment& x);

Graph random_graph(Rng& rng, int n, double p);
Graph cycle_graph(int n);
Graph complete_graph(int n);

Instance generated(Family family, int n, std::uint64_t seed, long modulus = 2,
                   int terminals = 2, bool weighted = false);

}  // namespace bgc::testing

#endif  // BGC_TESTS_SUPPORT_REFERENCE_HPP_
