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

#ifndef BGC_INSTANCE_HPP_
#define BGC_INSTANCE_HPP_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bgc/bias.hpp"
#include "bgc/graph.hpp"
#include "bgc/rational.hpp"

namespace bgc {

// Line-oriented instance format, '#' starts a comment:
//
//   graph <n>
//   bias empty | cyclic <m> | table <path> | color | matrix <d> | partition
//   edge <u> <v> [g=<int> | color=<int> | m=<r11,...,rdd>]
//   class <vertex> <terminal-id>      (partition bias)
//   root <v>
//   budget <k>
//   cost <v> <p>/<q>
//
// `graph` must precede every line that names a vertex. Group labels default
// to the identity; colour labels are mandatory under `bias color`.

enum class BiasKind { kEmpty, kCyclic, kTable, kColor, kMatrix, kPartition };

std::string to_string(BiasKind kind);

struct EdgeSpec {
  Vertex u = 0;
  Vertex v = 0;
  std::optional<long> g;
  std::optional<int> color;
  std::optional<std::vector<Rational>> matrix;

  friend bool operator==(const EdgeSpec&, const EdgeSpec&) = default;
};

struct BiasSpec {
  BiasKind kind = BiasKind::kEmpty;
  long modulus = 0;        // cyclic
  int dim = 0;             // matrix
  std::string table_path;  // table, as written in the file
  std::map<Vertex, int> classes;  // partition

  friend bool operator==(const BiasSpec&, const BiasSpec&) = default;
};

struct InstanceSpec {
  int n = 0;
  std::vector<EdgeSpec> edges;
  BiasSpec bias;
  std::optional<Vertex> root;
  std::optional<int> budget;
  std::map<Vertex, Rational> costs;  // only non-default entries

  friend bool operator==(const InstanceSpec&, const InstanceSpec&) = default;
};

struct Instance {
  InstanceSpec spec;
  Graph graph;
  OraclePtr oracle;
  std::vector<Rational> costs;  // one per vertex, 1 unless overridden
};

// Syntax only; throws ParseError naming the offending line.
InstanceSpec parse_instance_spec(std::string_view text);

// Builds the graph and oracle. Table paths are resolved against `base_dir`.
// Semantic problems are reported as ParseError with the line number when the
// spec came from text, otherwise with line 0.
Instance build_instance(InstanceSpec spec,
                        const std::filesystem::path& base_dir = {});

Instance parse_instance(std::string_view text,
                        const std::filesystem::path& base_dir = {});
Instance load_instance(const std::filesystem::path& path);

std::string render_instance(const InstanceSpec& spec);

}  // namespace bgc

#endif  // BGC_INSTANCE_HPP_
