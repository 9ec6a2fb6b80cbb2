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

#include "bgc/generators.hpp"

#include <algorithm>
#include <array>

#include "bgc/errors.hpp"
#include "bgc/groups.hpp"
#include "bgc/reductions.hpp"

namespace bgc {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw PreconditionError("empty range");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t r;
  do {
    r = next();
  } while (r >= limit);
  return r % bound;
}

long Rng::between(long lo, long hi) {
  return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

bool Rng::chance(double p) {
  return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
}

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 7> kFamilies{{
    {Family::kEmpty, "empty"},
    {Family::kCyclic, "cyclic"},
    {Family::kOct, "oct"},
    {Family::kColour, "color"},
    {Family::kMatrix, "matrix"},
    {Family::kApex, "apex"},
    {Family::kMultiway, "multiway"},
}};

std::vector<Edge> random_edges(Rng& rng, int n, double p) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.chance(p)) edges.push_back({u, v});
    }
  }
  return edges;
}

void copy_edges(const Graph& g, InstanceSpec& spec) {
  spec.n = g.num_vertices();
  for (const Edge& e : g.edges()) spec.edges.push_back(EdgeSpec{e.u, e.v});
}

RationalMatrix random_invertible(Rng& rng) {
  for (;;) {
    std::vector<Rational> entries;
    for (int i = 0; i < 4; ++i) entries.emplace_back(rng.between(-2, 2));
    RationalMatrix m(2, std::move(entries));
    if (m.inverse()) return m;
  }
}

void label_matrices(Rng& rng, InstanceSpec& spec) {
  spec.bias.kind = BiasKind::kMatrix;
  spec.bias.dim = 2;
  std::vector<RationalMatrix> potential;
  for (int v = 0; v < spec.n; ++v) potential.push_back(random_invertible(rng));
  for (auto& e : spec.edges) {
    RationalMatrix label = rng.chance(0.5)
                               ? *potential[e.u].inverse() * potential[e.v]
                               : random_invertible(rng);
    e.matrix = label.entries();
  }
}

InstanceSpec multiway(Rng& rng, const GeneratorOptions& options) {
  const int t = options.terminals;
  if (t < 1 || options.n < t + 2) {
    throw PreconditionError("multiway instances need n >= terminals + 2");
  }
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const int base = t + 1 + static_cast<int>(rng.below(
                                 static_cast<std::uint64_t>(options.n - t - 1)));
    Graph g(base, random_edges(rng, base, options.edge_probability));
    std::vector<Vertex> order(static_cast<std::size_t>(base));
    for (int i = 0; i < base; ++i) order[i] = i;
    for (int i = base - 1; i > 0; --i) {
      std::swap(order[i], order[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    }
    std::vector<Vertex> terminals(order.begin(), order.begin() + t);
    std::sort(terminals.begin(), terminals.end());
    int size = base - t + 1;
    bool isolated = false;
    for (Vertex v : terminals) {
      size += g.degree(v);
      isolated = isolated || g.degree(v) == 0;
    }
    if (isolated || size > options.n) continue;
    const auto reduced = build_multiway_instance(g, terminals);
    InstanceSpec spec;
    copy_edges(reduced.graph, spec);
    spec.bias.kind = BiasKind::kPartition;
    const auto& oracle =
        static_cast<const PartitionOracle&>(*reduced.oracle);
    spec.bias.classes = oracle.terminal_class();
    spec.root = reduced.root;
    return spec;
  }
  throw LimitExceededError("could not draw a multiway instance of the "
                           "requested size");
}

}  // namespace

std::string to_string(Family family) {
  for (const auto& [f, name] : kFamilies) {
    if (f == family) return std::string(name);
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& [f, n] : kFamilies) {
    if (n == name) return f;
  }
  return std::nullopt;
}

InstanceSpec generate_instance(const GeneratorOptions& options) {
  if (options.n < 1) throw PreconditionError("n must be positive");
  Rng rng(options.seed);
  InstanceSpec spec;
  switch (options.family) {
    case Family::kEmpty:
    case Family::kCyclic:
    case Family::kOct:
    case Family::kColour:
    case Family::kMatrix: {
      copy_edges(Graph(options.n, random_edges(rng, options.n,
                                               options.edge_probability)),
                 spec);
      spec.root = 0;
      break;
    }
    case Family::kApex: {
      const int base = options.n - 1;
      const auto apex = build_apex_instance(
          Graph(base, random_edges(rng, base, options.edge_probability)));
      copy_edges(apex.graph, spec);
      spec.root = apex.root;
      break;
    }
    case Family::kMultiway:
      spec = multiway(rng, options);
      break;
  }

  switch (options.family) {
    case Family::kCyclic:
      if (options.modulus < 1) throw PreconditionError("modulus must be >= 1");
      spec.bias.kind = BiasKind::kCyclic;
      spec.bias.modulus = options.modulus;
      for (auto& e : spec.edges) {
        e.g = static_cast<long>(
            rng.below(static_cast<std::uint64_t>(options.modulus)));
      }
      break;
    case Family::kOct:
      spec.bias.kind = BiasKind::kCyclic;
      spec.bias.modulus = 2;
      for (auto& e : spec.edges) e.g = 1;
      break;
    case Family::kColour:
      spec.bias.kind = BiasKind::kColor;
      for (auto& e : spec.edges) e.color = static_cast<int>(rng.below(3));
      break;
    case Family::kMatrix:
      label_matrices(rng, spec);
      break;
    default:
      break;
  }

  if (options.weighted) {
    for (Vertex v = 0; v < spec.n; ++v) {
      const long q = rng.between(1, 8);
      const long p = rng.between(1, 2 * q);
      Rational c(p, q);
      c.canonicalize();
      if (c != 1) spec.costs.emplace(v, std::move(c));
    }
  }
  return spec;
}

}  // namespace bgc
