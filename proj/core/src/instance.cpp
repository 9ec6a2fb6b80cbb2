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

#include "bgc/instance.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <memory>
#include <set>
#include <sstream>
#include <utility>

#include "bgc/errors.hpp"
#include "bgc/groups.hpp"

namespace bgc {

std::string to_string(BiasKind kind) {
  switch (kind) {
    case BiasKind::kEmpty: return "empty";
    case BiasKind::kCyclic: return "cyclic";
    case BiasKind::kTable: return "table";
    case BiasKind::kColor: return "color";
    case BiasKind::kMatrix: return "matrix";
    case BiasKind::kPartition: return "partition";
  }
  return "unknown";
}

namespace {

// Line numbers of the constructs of a parsed file. All zero for specs built
// in memory.
struct SourceLines {
  int graph = 0;
  int bias = 0;
  int root = 0;
  std::vector<int> edges;
  std::map<Vertex, int> classes;
  std::map<Vertex, int> costs;

  int edge(std::size_t i) const { return i < edges.size() ? edges[i] : 0; }
  static int at(const std::map<Vertex, int>& m, Vertex v) {
    auto it = m.find(v);
    return it == m.end() ? 0 : it->second;
  }
};

std::vector<std::string_view> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) {
    line = line.substr(0, hash);
  }
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
      ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename Int>
Int parse_int(std::string_view token, int line, const char* what) {
  Int value{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(),
                                   value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, std::string("invalid ") + what + " '" +
                               std::string(token) + "'");
  }
  return value;
}

Rational parse_rational_at(std::string_view token, int line) {
  try {
    return parse_rational(token);
  } catch (const MalformedInputError& e) {
    throw ParseError(line, e.what());
  }
}

void expect_arity(const std::vector<std::string_view>& tokens,
                  std::size_t lo, std::size_t hi, int line) {
  if (tokens.size() < lo || tokens.size() > hi) {
    throw ParseError(line, "wrong number of fields for '" +
                               std::string(tokens[0]) + "'");
  }
}

std::pair<InstanceSpec, SourceLines> parse_with_lines(std::string_view text) {
  InstanceSpec spec;
  SourceLines lines;
  bool have_graph = false;
  bool have_bias = false;
  bool have_budget = false;

  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto tokens = tokenize(raw);
    if (tokens.empty()) continue;
    const std::string_view key = tokens[0];

    if (key == "graph") {
      expect_arity(tokens, 2, 2, line);
      if (have_graph) throw ParseError(line, "duplicate 'graph' line");
      spec.n = parse_int<int>(tokens[1], line, "vertex count");
      if (spec.n < 0) throw ParseError(line, "vertex count must be >= 0");
      have_graph = true;
      lines.graph = line;
      continue;
    }
    if (key == "bias") {
      expect_arity(tokens, 2, 3, line);
      if (have_bias) throw ParseError(line, "duplicate 'bias' line");
      have_bias = true;
      lines.bias = line;
      const std::string_view kind = tokens[1];
      const bool has_arg = tokens.size() == 3;
      auto no_arg = [&] {
        if (has_arg) throw ParseError(line, "unexpected bias parameter");
      };
      auto need_arg = [&] {
        if (!has_arg) throw ParseError(line, "bias kind needs a parameter");
      };
      if (kind == "empty") {
        no_arg();
        spec.bias.kind = BiasKind::kEmpty;
      } else if (kind == "cyclic") {
        need_arg();
        spec.bias.kind = BiasKind::kCyclic;
        spec.bias.modulus = parse_int<long>(tokens[2], line, "modulus");
        if (spec.bias.modulus < 1) {
          throw ParseError(line, "modulus must be positive");
        }
      } else if (kind == "table") {
        need_arg();
        spec.bias.kind = BiasKind::kTable;
        spec.bias.table_path = std::string(tokens[2]);
      } else if (kind == "color") {
        no_arg();
        spec.bias.kind = BiasKind::kColor;
      } else if (kind == "matrix") {
        need_arg();
        spec.bias.kind = BiasKind::kMatrix;
        spec.bias.dim = parse_int<int>(tokens[2], line, "dimension");
        if (spec.bias.dim < 1) {
          throw ParseError(line, "matrix dimension must be positive");
        }
      } else if (kind == "partition") {
        no_arg();
        spec.bias.kind = BiasKind::kPartition;
      } else {
        throw ParseError(line, "unknown bias kind '" + std::string(kind) + "'");
      }
      continue;
    }
    if (!have_graph) {
      throw ParseError(line, "'" + std::string(key) +
                                 "' before the 'graph' line");
    }
    if (key == "edge") {
      expect_arity(tokens, 3, 4, line);
      EdgeSpec e;
      e.u = parse_int<int>(tokens[1], line, "vertex");
      e.v = parse_int<int>(tokens[2], line, "vertex");
      if (tokens.size() == 4) {
        const std::string_view label = tokens[3];
        const auto eq = label.find('=');
        if (eq == std::string_view::npos) {
          throw ParseError(line, "edge label must be name=value");
        }
        const std::string_view name = label.substr(0, eq);
        const std::string_view value = label.substr(eq + 1);
        if (name == "g") {
          e.g = parse_int<long>(value, line, "group label");
        } else if (name == "color") {
          e.color = parse_int<int>(value, line, "colour");
        } else if (name == "m") {
          std::vector<Rational> entries;
          std::size_t start = 0;
          while (start <= value.size()) {
            auto comma = value.find(',', start);
            if (comma == std::string_view::npos) comma = value.size();
            entries.push_back(
                parse_rational_at(value.substr(start, comma - start), line));
            start = comma + 1;
          }
          e.matrix = std::move(entries);
        } else {
          throw ParseError(line, "unknown edge label '" + std::string(name) +
                                     "'");
        }
      }
      spec.edges.push_back(std::move(e));
      lines.edges.push_back(line);
    } else if (key == "class") {
      expect_arity(tokens, 3, 3, line);
      const Vertex v = parse_int<int>(tokens[1], line, "vertex");
      const int terminal = parse_int<int>(tokens[2], line, "terminal id");
      if (!spec.bias.classes.emplace(v, terminal).second) {
        throw ParseError(line, "duplicate class for vertex " +
                                   std::to_string(v));
      }
      lines.classes[v] = line;
    } else if (key == "root") {
      expect_arity(tokens, 2, 2, line);
      if (spec.root) throw ParseError(line, "duplicate 'root' line");
      spec.root = parse_int<int>(tokens[1], line, "vertex");
      lines.root = line;
    } else if (key == "budget") {
      expect_arity(tokens, 2, 2, line);
      if (have_budget) throw ParseError(line, "duplicate 'budget' line");
      have_budget = true;
      spec.budget = parse_int<int>(tokens[1], line, "budget");
      if (*spec.budget < 0) throw ParseError(line, "budget must be >= 0");
    } else if (key == "cost") {
      expect_arity(tokens, 3, 3, line);
      const Vertex v = parse_int<int>(tokens[1], line, "vertex");
      Rational c = parse_rational_at(tokens[2], line);
      if (!spec.costs.emplace(v, std::move(c)).second) {
        throw ParseError(line, "duplicate cost for vertex " +
                                   std::to_string(v));
      }
      lines.costs[v] = line;
    } else {
      throw ParseError(line, "unknown directive '" + std::string(key) + "'");
    }
  }
  if (!have_graph) throw ParseError(0, "missing 'graph' line");
  return {std::move(spec), std::move(lines)};
}

bool check_vertex(const InstanceSpec& spec, Vertex v) {
  return v >= 0 && v < spec.n;
}

void require_vertex(const InstanceSpec& spec, Vertex v, int line) {
  if (!check_vertex(spec, v)) {
    throw ParseError(line, "vertex " + std::to_string(v) +
                               " out of range for a graph on " +
                               std::to_string(spec.n) + " vertices");
  }
}

Graph build_graph(const InstanceSpec& spec, const SourceLines& lines) {
  std::set<std::pair<Vertex, Vertex>> seen;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < spec.edges.size(); ++i) {
    const auto& e = spec.edges[i];
    const int line = lines.edge(i);
    require_vertex(spec, e.u, line);
    require_vertex(spec, e.v, line);
    if (e.u == e.v) {
      throw ParseError(line, "self-loop at vertex " + std::to_string(e.u) +
                                 "; subdivide it into a path first");
    }
    if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) {
      throw ParseError(line, "duplicate edge " + std::to_string(e.u) + " " +
                                 std::to_string(e.v) +
                                 "; subdivide parallel edges first");
    }
    edges.push_back({e.u, e.v});
  }
  return Graph(spec.n, std::move(edges));
}

void check_labels(const InstanceSpec& spec, const SourceLines& lines) {
  const BiasKind kind = spec.bias.kind;
  for (std::size_t i = 0; i < spec.edges.size(); ++i) {
    const auto& e = spec.edges[i];
    const int line = lines.edge(i);
    const bool group = kind == BiasKind::kCyclic || kind == BiasKind::kTable;
    if (e.g && !group) {
      throw ParseError(line, "label g= does not apply to bias " +
                                 to_string(kind));
    }
    if (e.color && kind != BiasKind::kColor) {
      throw ParseError(line, "label color= does not apply to bias " +
                                 to_string(kind));
    }
    if (e.matrix && kind != BiasKind::kMatrix) {
      throw ParseError(line, "label m= does not apply to bias " +
                                 to_string(kind));
    }
    if (kind == BiasKind::kColor && !e.color) {
      throw ParseError(line, "every edge needs a color= label");
    }
    if (kind == BiasKind::kMatrix && e.matrix) {
      const auto d = static_cast<std::size_t>(spec.bias.dim);
      if (e.matrix->size() != d * d) {
        throw ParseError(line, "matrix label needs " + std::to_string(d * d) +
                                   " entries");
      }
      if (!RationalMatrix(spec.bias.dim, *e.matrix).inverse()) {
        throw ParseError(line, "matrix label is singular");
      }
    }
  }
  if (!spec.bias.classes.empty() && kind != BiasKind::kPartition) {
    throw ParseError(lines.classes.begin()->second,
                     "'class' lines require bias partition");
  }
}

template <typename Oracle, typename Group, typename Label>
OraclePtr make_group_oracle(const Graph& g, Group group,
                            std::vector<Label> labels, int line) {
  try {
    return std::make_shared<Oracle>(g, std::move(group), std::move(labels));
  } catch (const MalformedInputError& e) {
    throw ParseError(line, e.what());
  }
}

OraclePtr build_oracle(const InstanceSpec& spec, const SourceLines& lines,
                       const Graph& g, const std::filesystem::path& base_dir) {
  const int m = g.num_edges();
  switch (spec.bias.kind) {
    case BiasKind::kEmpty:
      return std::make_shared<EmptyBias>();
    case BiasKind::kCyclic: {
      std::vector<long> labels(static_cast<std::size_t>(m) + 1, 0);
      for (int i = 0; i < m; ++i) {
        const auto& label = spec.edges[i].g;
        if (label && (*label < 0 || *label >= spec.bias.modulus)) {
          throw ParseError(lines.edge(i), "group label outside Z_" +
                                              std::to_string(spec.bias.modulus));
        }
        labels[i + 1] = label.value_or(0);
      }
      return make_group_oracle<CyclicOracle>(g, CyclicGroup(spec.bias.modulus),
                                             std::move(labels), lines.bias);
    }
    case BiasKind::kTable: {
      std::filesystem::path path = spec.bias.table_path;
      if (path.is_relative() && !base_dir.empty()) path = base_dir / path;
      TableGroup group = [&] {
        try {
          return TableGroup::load(path);
        } catch (const ParseError& e) {
          throw ParseError(lines.bias,
                           "group table " + path.string() + ": " + e.what());
        }
      }();
      std::vector<int> labels(static_cast<std::size_t>(m) + 1, 0);
      for (int i = 0; i < m; ++i) {
        const auto& label = spec.edges[i].g;
        if (label && !group.contains(static_cast<int>(*label))) {
          throw ParseError(lines.edge(i), "group label outside the table");
        }
        labels[i + 1] = static_cast<int>(label.value_or(0));
      }
      return make_group_oracle<TableOracle>(g, std::move(group),
                                            std::move(labels), lines.bias);
    }
    case BiasKind::kColor: {
      std::vector<int> colours(static_cast<std::size_t>(m) + 1, 0);
      for (int i = 0; i < m; ++i) colours[i + 1] = *spec.edges[i].color;
      return std::make_shared<ColourOracle>(g, std::move(colours));
    }
    case BiasKind::kMatrix: {
      const int d = spec.bias.dim;
      std::vector<RationalMatrix> labels(static_cast<std::size_t>(m) + 1,
                                         RationalMatrix::identity(d));
      for (int i = 0; i < m; ++i) {
        if (spec.edges[i].matrix) {
          labels[i + 1] = RationalMatrix(d, *spec.edges[i].matrix);
        }
      }
      return make_group_oracle<MatrixOracle>(g, MatrixGroup(d),
                                             std::move(labels), lines.bias);
    }
    case BiasKind::kPartition: {
      if (!spec.root) {
        throw ParseError(lines.bias, "bias partition requires a 'root' line");
      }
      for (const auto& [v, terminal] : spec.bias.classes) {
        require_vertex(spec, v, SourceLines::at(lines.classes, v));
      }
      try {
        return std::make_shared<PartitionOracle>(g, *spec.root,
                                                 spec.bias.classes);
      } catch (const Error& e) {
        throw ParseError(lines.bias, e.what());
      }
    }
  }
  throw ParseError(lines.bias, "unsupported bias kind");
}

Instance build_with_lines(InstanceSpec spec, const SourceLines& lines,
                          const std::filesystem::path& base_dir) {
  Instance inst;
  inst.graph = build_graph(spec, lines);
  if (spec.root) require_vertex(spec, *spec.root, lines.root);
  check_labels(spec, lines);
  inst.oracle = build_oracle(spec, lines, inst.graph, base_dir);
  inst.costs.assign(static_cast<std::size_t>(spec.n), Rational(1));
  for (const auto& [v, c] : spec.costs) {
    const int line = SourceLines::at(lines.costs, v);
    require_vertex(spec, v, line);
    if (c <= 0) throw ParseError(line, "costs must be positive");
    inst.costs[v] = c;
  }
  inst.spec = std::move(spec);
  return inst;
}

}  // namespace

InstanceSpec parse_instance_spec(std::string_view text) {
  return parse_with_lines(text).first;
}

Instance build_instance(InstanceSpec spec,
                        const std::filesystem::path& base_dir) {
  return build_with_lines(std::move(spec), SourceLines{}, base_dir);
}

Instance parse_instance(std::string_view text,
                        const std::filesystem::path& base_dir) {
  auto [spec, lines] = parse_with_lines(text);
  return build_with_lines(std::move(spec), lines, base_dir);
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str(), path.parent_path());
}

std::string render_instance(const InstanceSpec& spec) {
  std::ostringstream out;
  out << "graph " << spec.n << "\n";
  out << "bias " << to_string(spec.bias.kind);
  switch (spec.bias.kind) {
    case BiasKind::kCyclic: out << " " << spec.bias.modulus; break;
    case BiasKind::kTable: out << " " << spec.bias.table_path; break;
    case BiasKind::kMatrix: out << " " << spec.bias.dim; break;
    default: break;
  }
  out << "\n";
  for (const auto& e : spec.edges) {
    out << "edge " << e.u << " " << e.v;
    if (e.g) out << " g=" << *e.g;
    if (e.color) out << " color=" << *e.color;
    if (e.matrix) {
      out << " m=";
      for (std::size_t i = 0; i < e.matrix->size(); ++i) {
        out << (i ? "," : "") << to_string((*e.matrix)[i]);
      }
    }
    out << "\n";
  }
  for (const auto& [v, terminal] : spec.bias.classes) {
    out << "class " << v << " " << terminal << "\n";
  }
  if (spec.root) out << "root " << *spec.root << "\n";
  if (spec.budget) out << "budget " << *spec.budget << "\n";
  for (const auto& [v, c] : spec.costs) {
    out << "cost " << v << " " << to_string(c) << "\n";
  }
  return out.str();
}

}  // namespace bgc
