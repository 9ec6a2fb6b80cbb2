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

#ifndef BGC_GENERATORS_HPP_
#define BGC_GENERATORS_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "bgc/instance.hpp"

namespace bgc {

// Deterministic across platforms: only raw mt19937_64 output is used, never
// the implementation-defined standard distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [lo, hi].
  long between(long lo, long hi);
  bool chance(double p);

 private:
  std::mt19937_64 engine_;
};

enum class Family {
  kEmpty,     // feedback vertex set
  kCyclic,    // random Z_m labels
  kOct,       // Z_2, every label 1 (odd cycle transversal)
  kColour,    // random 3-colouring of the edges
  kMatrix,    // 2x2 rational matrices, planted potentials plus noise
  kApex,      // vertex cover through an apex vertex
  kMultiway,  // multiway cut through terminal copies
};

std::string to_string(Family family);
std::optional<Family> parse_family(std::string_view name);

struct GeneratorOptions {
  Family family = Family::kEmpty;
  int n = 8;  // vertex count of the produced instance (an upper bound for
              // multiway, whose size depends on terminal degrees)
  double edge_probability = 0.5;
  long modulus = 2;
  int terminals = 2;
  bool weighted = false;  // random costs p/q with q <= 8
  std::uint64_t seed = 1;
};

// Erdos-Renyi base graph plus the family's bias. The root is 0, the apex, or
// the multiway root.
InstanceSpec generate_instance(const GeneratorOptions& options);

}  // namespace bgc

#endif  // BGC_GENERATORS_HPP_
