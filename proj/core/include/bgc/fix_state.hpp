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

#ifndef BGC_FIX_STATE_HPP_
#define BGC_FIX_STATE_HPP_

#include <vector>

#include "bgc/graph.hpp"
#include "bgc/rational.hpp"

namespace bgc {

// Branching decisions expressed as LP costs. Fixing v = 0 prices v at 2n so an
// optimum avoids it unless no other choice exists; fixing v = 1 prices it at
// 1/(3n) so it is nearly free to delete.
struct FixState {
  VertexSet fixed_zero;
  VertexSet fixed_one;
  std::vector<Rational> base_costs;

  int num_vertices() const { return static_cast<int>(base_costs.size()); }
  bool is_fixed(Vertex v) const {
    return set_contains(fixed_zero, v) || set_contains(fixed_one, v);
  }

  // Throws PreconditionError if the two sets intersect or leave the range.
  void validate() const;

  std::vector<Rational> effective_costs() const;
};

std::vector<Rational> unit_costs(int n);

}  // namespace bgc

#endif  // BGC_FIX_STATE_HPP_
