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

#ifndef BGC_BIAS_HPP_
#define BGC_BIAS_HPP_

#include <array>
#include <atomic>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bgc/errors.hpp"
#include "bgc/graph.hpp"
#include "bgc/groups.hpp"

namespace bgc {

// Membership oracle for the class of balanced cycles of one graph.
//
// is_balanced() validates the cycle, counts the query, and memoises the answer
// on the canonical vertex order. Subclasses implement evaluate(). The memo
// table is guarded by a mutex, so an oracle may be shared by concurrent
// solvers.
class BiasOracle {
 public:
  virtual ~BiasOracle() = default;

  bool is_balanced(const Graph& g, const SimpleCycle& c) const;

  // True for group-labelled families, which can decide balancedness of an
  // induced subgraph with potentials instead of cycle enumeration.
  virtual bool has_fast_balanced_subgraph() const { return false; }
  virtual bool fast_balanced_subgraph(const Graph& g,
                                      std::span<const Vertex> s) const;

  // False for user-supplied oracles whose class has not been proven linear.
  virtual bool known_linear() const { return true; }

  virtual std::string name() const = 0;

  // Calls to is_balanced(), including memo hits.
  std::uint64_t query_count() const { return queries_.load(); }
  // Calls that reached evaluate().
  std::uint64_t evaluation_count() const { return evaluations_.load(); }
  void reset_statistics() const {
    queries_ = 0;
    evaluations_ = 0;
  }

 protected:
  virtual bool evaluate(const Graph& g, const SimpleCycle& c) const = 0;

 private:
  mutable std::mutex memo_mutex_;
  mutable std::map<std::vector<Vertex>, bool> memo_;
  mutable std::atomic<std::uint64_t> queries_{0};
  mutable std::atomic<std::uint64_t> evaluations_{0};
};

using OraclePtr = std::shared_ptr<const BiasOracle>;

// B = {}: every cycle is unbalanced (Feedback Vertex Set).
class EmptyBias final : public BiasOracle {
 public:
  std::string name() const override { return "empty"; }

 protected:
  bool evaluate(const Graph&, const SimpleCycle&) const override {
    return false;
  }
};

// Gain graph over `Group`. labels[i] (1-based) is the label of edge i read
// from edge(i).u to edge(i).v; the reverse direction carries the inverse.
template <typename Group>
class GroupLabelledOracle final : public BiasOracle {
 public:
  using Element = typename Group::Element;

  GroupLabelledOracle(const Graph& g, Group group, std::vector<Element> labels)
      : group_(std::move(group)), labels_(std::move(labels)) {
    if (labels_.size() != static_cast<std::size_t>(g.num_edges()) + 1) {
      throw MalformedInputError("group labelling must label every edge");
    }
    inverse_labels_.reserve(labels_.size());
    inverse_labels_.push_back(group_.identity());
    for (std::size_t i = 1; i < labels_.size(); ++i) {
      if (!group_.contains(labels_[i])) {
        throw MalformedInputError("edge " + std::to_string(i) +
                                  " carries a label outside the group");
      }
      inverse_labels_.push_back(group_.inverse(labels_[i]));
      if (!group_.equal(group_.multiply(labels_[i], inverse_labels_[i]),
                        group_.identity())) {
        throw MalformedInputError("edge " + std::to_string(i) +
                                  " label is not inverse-consistent");
      }
    }
  }

  const Group& group() const { return group_; }
  const std::vector<Element>& labels() const { return labels_; }

  // Label of the edge uv traversed from `from` to its other endpoint.
  const Element& oriented_label(const Graph& g, EdgeIndex e,
                                Vertex from) const {
    return g.edge(e).u == from ? labels_[e] : inverse_labels_[e];
  }

  bool has_fast_balanced_subgraph() const override { return true; }

  bool fast_balanced_subgraph(const Graph& g,
                              std::span<const Vertex> s) const override {
    std::vector<char> inside(static_cast<std::size_t>(g.num_vertices()), 0);
    for (Vertex v : s) inside[v] = 1;
    std::vector<std::optional<Element>> potential(inside.size());
    std::vector<Vertex> queue;
    for (Vertex root : s) {
      if (potential[root]) continue;
      potential[root] = group_.identity();
      queue.assign(1, root);
      for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex u = queue[head];
        for (const auto& inc : g.incident(u)) {
          if (!inside[inc.neighbor]) continue;
          Element through =
              group_.multiply(*potential[u], oriented_label(g, inc.edge, u));
          if (!potential[inc.neighbor]) {
            potential[inc.neighbor] = std::move(through);
            queue.push_back(inc.neighbor);
          } else if (!group_.equal(*potential[inc.neighbor], through)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  std::string name() const override { return "group"; }

 protected:
  bool evaluate(const Graph& g, const SimpleCycle& c) const override {
    Element product = group_.identity();
    const auto& vs = c.vertices;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      Vertex a = vs[i];
      Vertex b = vs[(i + 1) % vs.size()];
      product =
          group_.multiply(product, oriented_label(g, *g.edge_between(a, b), a));
    }
    return group_.equal(product, group_.identity());
  }

 private:
  Group group_;
  std::vector<Element> labels_;
  std::vector<Element> inverse_labels_;
};

using CyclicOracle = GroupLabelledOracle<CyclicGroup>;
using TableOracle = GroupLabelledOracle<TableGroup>;
using MatrixOracle = GroupLabelledOracle<MatrixGroup>;

// A cycle is balanced iff it is monochromatic. colours[i] is the colour of
// edge i (1-based; entry 0 unused).
class ColourOracle final : public BiasOracle {
 public:
  ColourOracle(const Graph& g, std::vector<int> colours);
  const std::vector<int>& colours() const { return colours_; }
  std::string name() const override { return "color"; }

 protected:
  bool evaluate(const Graph& g, const SimpleCycle& c) const override;

 private:
  std::vector<int> colours_;
};

// Multiway-cut bias: a cycle is unbalanced iff it passes through the root
// and its two neighbours on the cycle belong to different terminals.
class PartitionOracle final : public BiasOracle {
 public:
  // `terminal_class` must be total on N(root).
  PartitionOracle(const Graph& g, Vertex root,
                  std::map<Vertex, int> terminal_class);

  Vertex root() const { return root_; }
  const std::map<Vertex, int>& terminal_class() const { return classes_; }
  std::string name() const override { return "partition"; }

 protected:
  bool evaluate(const Graph& g, const SimpleCycle& c) const override;

 private:
  Vertex root_;
  std::map<Vertex, int> classes_;
};

// User-supplied predicate. Linearity is not assumed.
class FunctionOracle final : public BiasOracle {
 public:
  using Predicate = std::function<bool(const Graph&, const SimpleCycle&)>;

  explicit FunctionOracle(Predicate predicate, std::string name = "function")
      : predicate_(std::move(predicate)), name_(std::move(name)) {}

  bool known_linear() const override { return false; }
  std::string name() const override { return name_; }

 protected:
  bool evaluate(const Graph& g, const SimpleCycle& c) const override {
    return predicate_(g, c);
  }

 private:
  Predicate predicate_;
  std::string name_;
};

// Presents the parent's oracle on an induced subgraph. Queries are mapped back
// to parent vertex ids, so the parent's memo and counters see them.
class RestrictedOracle final : public BiasOracle {
 public:
  RestrictedOracle(const BiasOracle& parent, const Graph& parent_graph,
                   std::vector<Vertex> to_parent)
      : parent_(parent),
        parent_graph_(parent_graph),
        to_parent_(std::move(to_parent)) {}

  bool has_fast_balanced_subgraph() const override {
    return parent_.has_fast_balanced_subgraph();
  }
  bool fast_balanced_subgraph(const Graph& g,
                              std::span<const Vertex> s) const override;
  bool known_linear() const override { return parent_.known_linear(); }
  std::string name() const override { return parent_.name(); }

 protected:
  bool evaluate(const Graph& g, const SimpleCycle& c) const override;

 private:
  const BiasOracle& parent_;
  const Graph& parent_graph_;
  std::vector<Vertex> to_parent_;
};

bool is_balanced_cycle(const BiasOracle& oracle, const Graph& g,
                       const SimpleCycle& c);

// True iff G[s] has no unbalanced cycle. Uses potentials for group-labelled
// oracles and cycle enumeration otherwise.
bool is_balanced_subgraph(const BiasOracle& oracle, const Graph& g,
                          std::span<const Vertex> s,
                          std::size_t max_cycles = kDefaultCycleLimit);

// Always enumerates cycles, even when a fast path exists.
bool is_balanced_subgraph_generic(const BiasOracle& oracle, const Graph& g,
                                  std::span<const Vertex> s,
                                  std::size_t max_cycles = kDefaultCycleLimit);

struct Theta {
  Vertex a = 0;
  Vertex b = 0;
  std::array<VertexPath, 3> paths;
  std::array<SimpleCycle, 3> cycles;  // cycles[i] avoids paths[i]
  std::array<bool, 3> balanced{};
};

struct LinearityReport {
  std::optional<Theta> counterexample;
  std::size_t thetas_checked = 0;

  bool ok() const { return !counterexample.has_value(); }
};

inline constexpr std::size_t kDefaultPathLimit = 200'000;

// Enumerates every theta subgraph and reports the first one holding exactly
// two balanced cycles. Throws LimitExceededError when the number of
// connecting paths exceeds `max_paths`.
LinearityReport validate_linearity(const BiasOracle& oracle, const Graph& g,
                                   std::size_t max_paths = kDefaultPathLimit);

// Largest graph on which solvers validate a user oracle before running.
inline constexpr int kLinearityCheckMaxVertices = 8;

// Runs validate_linearity on oracles that are not known to be linear when the
// graph is small, throwing PreconditionError on a counterexample, and writes a
// warning to std::clog otherwise.
void ensure_linear(const BiasOracle& oracle, const Graph& g);

}  // namespace bgc

#endif  // BGC_BIAS_HPP_
