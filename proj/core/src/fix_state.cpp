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

#include "bgc/fix_state.hpp"

#include <string>

#include "bgc/errors.hpp"

namespace bgc {

void FixState::validate() const {
  const int n = num_vertices();
  for (const auto* set : {&fixed_zero, &fixed_one}) {
    for (Vertex v : *set) {
      if (v < 0 || v >= n) {
        throw PreconditionError("fixed vertex " + std::to_string(v) +
                                " out of range");
      }
    }
  }
  if (!set_intersection(fixed_zero, fixed_one).empty()) {
    throw PreconditionError("a vertex cannot be fixed to both 0 and 1");
  }
}

std::vector<Rational> FixState::effective_costs() const {
  validate();
  const int n = num_vertices();
  std::vector<Rational> costs = base_costs;
  for (Vertex v : fixed_zero) costs[v] = 2 * n;
  for (Vertex v : fixed_one) costs[v] = Rational(1, 3 * n);
  return costs;
}

std::vector<Rational> unit_costs(int n) {
  return std::vector<Rational>(static_cast<std::size_t>(n), Rational(1));
}

}  // namespace bgc
