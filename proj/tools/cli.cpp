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

#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>

#include "bgc/bias.hpp"
#include "bgc/brute.hpp"
#include "bgc/errors.hpp"
#include "bgc/fix_state.hpp"
#include "bgc/fpt.hpp"
#include "bgc/generators.hpp"
#include "bgc/instance.hpp"
#include "bgc/local_lp.hpp"
#include "bgc/reductions.hpp"

namespace bgc::cli {
namespace {

std::string join(const VertexSet& s, const char* sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? sep : "") << s[i];
  return out.str();
}

std::string braces(const VertexSet& s) { return "{" + join(s, ", ") + "}"; }

// Ordered key=value lines printed after the human report.
class ResultBlock {
 public:
  template <typename T>
  void set(const std::string& key, const T& value) {
    std::ostringstream s;
    s << value;
    entries_.emplace_back(key, s.str());
  }
  void set(const std::string& key, const Rational& value) {
    entries_.emplace_back(key, to_string(value));
  }
  void set_set(const std::string& key, const VertexSet& s) {
    entries_.emplace_back(key, join(s, ","));
  }

  void print(std::ostream& out) const {
    out << "[result]\n";
    for (const auto& [k, v] : entries_) out << k << "=" << v << "\n";
  }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

struct InstanceArgs {
  std::string path;
  std::optional<int> root;
  std::optional<int> budget;
  int jobs = 1;
  bool persistence = false;
  bool maximize = false;
};

Instance load(const InstanceArgs& a) {
  if (a.path == "-") {
    std::stringstream buffer;
    buffer << std::cin.rdbuf();
    return parse_instance(buffer.str());
  }
  return load_instance(a.path);
}

Vertex require_root(const Instance& inst, const InstanceArgs& a) {
  if (a.root) return *a.root;
  if (inst.spec.root) return *inst.spec.root;
  throw PreconditionError("no root given; use --root or a 'root' line");
}

int budget_of(const Instance& inst, const InstanceArgs& a) {
  if (a.budget) return *a.budget;
  if (inst.spec.budget) return *inst.spec.budget;
  return inst.graph.num_vertices();
}

void describe(std::ostream& out, const std::string& command,
              const Instance& inst) {
  out << command << ": n=" << inst.graph.num_vertices()
      << " m=" << inst.graph.num_edges()
      << " bias=" << to_string(inst.spec.bias.kind) << "\n";
}

void add_stats(ResultBlock& r, const SearchStats& s) {
  r.set("lp_rounds", s.lp_rounds);
  r.set("lp_solves", s.lp_solves);
  r.set("branch_nodes", s.branch_nodes);
  r.set("oracle_queries", s.oracle_queries);
}

void print_stats(std::ostream& out, const SearchStats& s) {
  out << "search: " << s.branch_nodes << " branch nodes, " << s.leaves
      << " leaves, depth " << s.max_depth << ", " << s.lp_solves
      << " LP solves, " << s.lp_rounds << " cutting-plane rounds, "
      << s.oracle_queries << " oracle queries\n";
}

int cmd_solve_local(const InstanceArgs& a, std::ostream& out) {
  const Instance inst = load(a);
  const Vertex root = require_root(inst, a);
  const int k = budget_of(inst, a);
  describe(out, "solve-local", inst);
  SolverOptions options;
  options.jobs = a.jobs;
  options.root_persistence = a.persistence;
  const auto result = solve_local(inst.graph, *inst.oracle, root, k, options);
  out << "root " << root << ", budget " << k << ", root LP value "
      << to_string(result.stats.lambda_root) << "\n";
  print_stats(out, result.stats);
  ResultBlock r;
  if (result.solution) {
    out << "optimum " << result.solution->deleted.size() << ": delete "
        << braces(result.solution->deleted) << ", root region "
        << braces(result.solution->region) << "\n";
    r.set("status", "solved");
    r.set("optimum", result.solution->deleted.size());
    r.set_set("witness", result.solution->deleted);
  } else {
    out << "no solution within budget " << k << "\n";
    r.set("status", "infeasible");
    r.set("optimum", "none");
    r.set_set("witness", {});
  }
  r.set("lambda", result.stats.lambda_root);
  add_stats(r, result.stats);
  r.print(out);
  return result.solution ? kExitSolved : kExitInfeasible;
}

int cmd_solve_global(const InstanceArgs& a, std::ostream& out) {
  const Instance inst = load(a);
  const int k = budget_of(inst, a);
  describe(out, "solve-global", inst);
  SolverOptions options;
  options.jobs = a.jobs;
  const auto result = solve_global(inst.graph, *inst.oracle, k, options);
  out << "budget " << k << "\n";
  print_stats(out, result.stats);
  ResultBlock r;
  if (result.solution) {
    out << "optimum " << result.solution->deleted.size() << ": delete "
        << braces(result.solution->deleted) << "\n";
    r.set("status", "solved");
    r.set("optimum", result.solution->deleted.size());
    r.set_set("witness", result.solution->deleted);
  } else {
    out << "no solution within budget " << k << "\n";
    r.set("status", "infeasible");
    r.set("optimum", "none");
    r.set_set("witness", {});
  }
  add_stats(r, result.stats);
  r.print(out);
  return result.solution ? kExitSolved : kExitInfeasible;
}

int cmd_approx(const InstanceArgs& a, std::ostream& out) {
  const Instance inst = load(a);
  const Vertex root = require_root(inst, a);
  describe(out, "approx", inst);
  const auto before = inst.oracle->query_count();
  const auto result = approximate_local(inst.graph, *inst.oracle, root,
                                        inst.costs);
  out << "LP value " << to_string(result.lambda) << ", deleting "
      << braces(result.solution.deleted) << " of cost "
      << to_string(result.cost) << " (at most twice the LP value)\n";
  ResultBlock r;
  r.set("status", "solved");
  r.set("optimum", result.cost);
  r.set_set("witness", result.solution.deleted);
  r.set("lambda", result.lambda);
  r.set("oracle_queries", inst.oracle->query_count() - before);
  r.print(out);
  return kExitSolved;
}

int cmd_brute(const InstanceArgs& a, bool local, std::ostream& out) {
  const Instance inst = load(a);
  describe(out, local ? "brute-local" : "brute-global", inst);
  const auto before = inst.oracle->query_count();
  const BruteResult result =
      local ? brute_local(inst.graph, *inst.oracle, require_root(inst, a))
            : brute_global(inst.graph, *inst.oracle);
  out << "optimum " << result.optimum << ": delete " << braces(result.witness)
      << "\n";
  ResultBlock r;
  r.set("status", "solved");
  r.set("optimum", result.optimum);
  r.set_set("witness", result.witness);
  r.set("oracle_queries", inst.oracle->query_count() - before);
  r.print(out);
  return kExitSolved;
}

int cmd_lp(const InstanceArgs& a, std::ostream& out) {
  const Instance inst = load(a);
  const Vertex root = require_root(inst, a);
  describe(out, "lp", inst);
  const auto before = inst.oracle->query_count();
  HalfIntegralCertificate cert;
  std::size_t rounds = 0;
  std::size_t solves = 1;
  if (a.maximize) {
    auto region = maximize_reachable_region(inst.graph, *inst.oracle, root,
                                            inst.costs);
    cert = std::move(region.certificate);
    rounds = region.lp_rounds;
    solves = region.lp_solves;
  } else {
    auto lp = solve_local_lp(inst.graph, *inst.oracle, root, inst.costs);
    rounds = lp.rounds;
    cert = round_half_integral(inst.graph, *inst.oracle, lp.x, lp.lambda,
                               inst.costs);
  }
  out << "lambda " << to_string(cert.lambda) << "\n"
      << "V_R " << braces(cert.reachable) << "\n"
      << "V_1 " << braces(cert.ones) << "\n"
      << "V_1/2 " << braces(cert.halves) << "\n";
  ResultBlock r;
  r.set("status", "solved");
  r.set("lambda", cert.lambda);
  r.set_set("v_r", cert.reachable);
  r.set_set("v_1", cert.ones);
  r.set_set("v_half", cert.halves);
  r.set("lp_rounds", rounds);
  r.set("lp_solves", solves);
  r.set("oracle_queries", inst.oracle->query_count() - before);
  r.print(out);
  return kExitSolved;
}

int cmd_validate(const InstanceArgs& a, std::ostream& out) {
  const Instance inst = load(a);
  describe(out, "validate", inst);
  out << "labels: ok\n";
  const auto report = validate_linearity(*inst.oracle, inst.graph);
  ResultBlock r;
  r.set("thetas", report.thetas_checked);
  if (report.ok()) {
    out << "linearity: ok over " << report.thetas_checked << " thetas\n";
    r.set("status", "ok");
    r.print(out);
    return kExitSolved;
  }
  const Theta& t = *report.counterexample;
  out << "linearity: violated by a theta between " << t.a << " and " << t.b
      << "\n";
  for (int i = 0; i < 3; ++i) {
    out << "  path " << i + 1 << ": " << join(t.paths[i].vertices, " ")
        << ", cycle avoiding it is "
        << (t.balanced[i] ? "balanced" : "unbalanced") << "\n";
  }
  r.set("status", "counterexample");
  r.set("theta_a", t.a);
  r.set("theta_b", t.b);
  r.print(out);
  return kExitInfeasible;
}

VertexSet parse_vertex_list(const std::string& text) {
  VertexSet out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw PreconditionError("invalid vertex '" + item + "'");
    }
  }
  return out;
}

int cmd_reduce(const std::string& kind, const InstanceArgs& a,
               const std::string& terminals, std::ostream& out) {
  const Instance inst = load(a);
  InstanceSpec spec;
  RootedInstance reduced;
  if (kind == "apex") {
    reduced = build_apex_instance(inst.graph);
  } else {
    const auto t = parse_vertex_list(terminals);
    auto mw = build_multiway_instance(inst.graph, t);
    spec.bias.kind = BiasKind::kPartition;
    spec.bias.classes =
        static_cast<const PartitionOracle&>(*mw.oracle).terminal_class();
    reduced = std::move(mw);
  }
  spec.n = reduced.graph.num_vertices();
  for (const Edge& e : reduced.graph.edges()) {
    EdgeSpec edge;
    edge.u = e.u;
    edge.v = e.v;
    spec.edges.push_back(std::move(edge));
  }
  spec.root = reduced.root;
  out << render_instance(spec);
  return kExitSolved;
}

int cmd_gen(const GeneratorOptions& g, const std::string& family,
            std::optional<int> budget, std::ostream& out) {
  GeneratorOptions options = g;
  auto f = parse_family(family);
  if (!f) throw PreconditionError("unknown family '" + family + "'");
  options.family = *f;
  InstanceSpec spec = generate_instance(options);
  spec.budget = budget;
  out << render_instance(spec);
  return kExitSolved;
}

int cmd_bench(const GeneratorOptions& g, const std::string& family, int count,
              const std::string& mode, int jobs, std::ostream& out) {
  auto f = parse_family(family);
  if (!f) throw PreconditionError("unknown family '" + family + "'");
  if (mode != "local" && mode != "global") {
    throw PreconditionError("mode must be local or global");
  }
  const bool local = mode == "local";
  out << "bench: family=" << family << " n=" << g.n << " count=" << count
      << " mode=" << mode << "\n";
  out << std::setw(6) << "seed" << std::setw(5) << "opt" << std::setw(8)
      << "lambda" << std::setw(8) << "nodes" << std::setw(8) << "lps"
      << std::setw(8) << "rounds" << std::setw(10) << "queries"
      << std::setw(10) << "ms" << "\n";
  SearchStats total;
  std::size_t solved = 0;
  SolverOptions options;
  options.jobs = jobs;
  for (int i = 0; i < count; ++i) {
    GeneratorOptions opt = g;
    opt.family = *f;
    opt.seed = g.seed + static_cast<std::uint64_t>(i);
    const Instance inst = build_instance(generate_instance(opt));
    const int n = inst.graph.num_vertices();
    const auto start = std::chrono::steady_clock::now();
    std::optional<VertexSet> best;
    SearchStats stats;
    if (local) {
      auto r = solve_local(inst.graph, *inst.oracle, *inst.spec.root, n,
                           options);
      stats = r.stats;
      if (r.solution) best = r.solution->deleted;
    } else {
      auto r = solve_global(inst.graph, *inst.oracle, n, options);
      stats = r.stats;
      if (r.solution) best = r.solution->deleted;
    }
    const auto ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    solved += best ? 1 : 0;
    total += stats;
    out << std::setw(6) << opt.seed << std::setw(5)
        << (best ? std::to_string(best->size()) : "-") << std::setw(8)
        << (local ? to_string(stats.lambda_root) : "-") << std::setw(8)
        << stats.branch_nodes << std::setw(8) << stats.lp_solves
        << std::setw(8) << stats.lp_rounds << std::setw(10)
        << stats.oracle_queries << std::setw(10) << std::fixed
        << std::setprecision(2) << ms << "\n";
  }
  ResultBlock r;
  r.set("status", "solved");
  r.set("instances", count);
  r.set("solved", solved);
  add_stats(r, total);
  r.print(out);
  return kExitSolved;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact solvers for biased graph cleaning"};
  app.name("bgclean");
  app.require_subcommand(1);

  InstanceArgs ia;
  std::function<int()> action;

  auto add_instance = [&](CLI::App* sub) {
    sub->add_option("instance", ia.path, "Instance file, '-' for stdin")
        ->required();
  };
  auto add_root = [&](CLI::App* sub) {
    sub->add_option("--root", ia.root, "Root vertex (overrides the file)");
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget,-k", ia.budget,
                    "Deletion budget (overrides the file)");
  };
  auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs,-j", ia.jobs, "Worker threads for branching")
        ->check(CLI::PositiveNumber);
  };

  auto* local = app.add_subcommand("solve-local", "Exact rooted solver");
  add_instance(local);
  add_root(local);
  add_budget(local);
  add_jobs(local);
  local->add_flag("--persistence", ia.persistence,
                  "Also fix V_1 to 1 at the root node");
  local->callback([&] { action = [&] { return cmd_solve_local(ia, out); }; });

  auto* global = app.add_subcommand("solve-global", "Exact global solver");
  add_instance(global);
  add_budget(global);
  add_jobs(global);
  global->callback([&] { action = [&] { return cmd_solve_global(ia, out); }; });

  auto* approx = app.add_subcommand("approx", "Weighted 2-approximation");
  add_instance(approx);
  add_root(approx);
  approx->callback([&] { action = [&] { return cmd_approx(ia, out); }; });

  auto* blocal = app.add_subcommand("brute-local", "Exhaustive rooted solver");
  add_instance(blocal);
  add_root(blocal);
  blocal->callback([&] { action = [&] { return cmd_brute(ia, true, out); }; });

  auto* bglobal =
      app.add_subcommand("brute-global", "Exhaustive global solver");
  add_instance(bglobal);
  bglobal->callback([&] { action = [&] { return cmd_brute(ia, false, out); }; });

  auto* lp = app.add_subcommand(
      "lp", "Solve the local LP and print the half-integral certificate");
  add_instance(lp);
  add_root(lp);
  lp->add_flag("--maximize", ia.maximize,
               "Grow V_R by fixing half vertices to 0 where free");
  lp->callback([&] { action = [&] { return cmd_lp(ia, out); }; });

  auto* validate =
      app.add_subcommand("validate", "Check labels and linearity");
  add_instance(validate);
  validate->callback([&] { action = [&] { return cmd_validate(ia, out); }; });

  std::string reduce_kind;
  std::string terminals;
  auto* reduce =
      app.add_subcommand("reduce", "Print the apex or multiway instance");
  reduce->add_option("kind", reduce_kind, "apex or multiway")
      ->required()
      ->check(CLI::IsMember({"apex", "multiway"}));
  add_instance(reduce);
  reduce->add_option("--terminals", terminals,
                     "Comma-separated terminals for multiway");
  reduce->callback([&] {
    if (reduce_kind == "multiway" && terminals.empty()) {
      throw CLI::ValidationError("--terminals", "required for multiway");
    }
    action = [&] { return cmd_reduce(reduce_kind, ia, terminals, out); };
  });

  GeneratorOptions gen_options;
  std::string family = "empty";
  std::optional<int> gen_budget;
  auto add_generator = [&](CLI::App* sub) {
    sub->add_option("--family", family,
                    "empty|cyclic|oct|color|matrix|apex|multiway");
    sub->add_option("--n", gen_options.n, "Vertex count")
        ->check(CLI::Range(1, 64));
    sub->add_option("--p", gen_options.edge_probability, "Edge probability")
        ->check(CLI::Range(0.0, 1.0));
    sub->add_option("--modulus", gen_options.modulus, "Cyclic modulus")
        ->check(CLI::PositiveNumber);
    sub->add_option("--terminals", gen_options.terminals,
                    "Multiway terminal count")
        ->check(CLI::Range(1, 8));
    sub->add_flag("--weighted", gen_options.weighted, "Random rational costs");
    sub->add_option("--seed", gen_options.seed, "Random seed");
  };
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  add_generator(gen);
  gen->add_option("--budget", gen_budget, "Budget line to include");
  gen->callback([&] {
    action = [&] { return cmd_gen(gen_options, family, gen_budget, out); };
  });

  int count = 10;
  std::string mode = "local";
  auto* bench = app.add_subcommand("bench", "Search statistics table");
  add_generator(bench);
  bench->add_option("--count", count, "Instances")->check(CLI::PositiveNumber);
  bench->add_option("--mode", mode, "local or global");
  add_jobs(bench);
  bench->callback([&] {
    action = [&] {
      return cmd_bench(gen_options, family, count, mode, ia.jobs, out);
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitSolved : kExitInputError;
  }

  try {
    return action();
  } catch (const ParseError& e) {
    err << "bgclean: input error: " << e.what() << "\n";
  } catch (const PreconditionError& e) {
    err << "bgclean: input error: " << e.what() << "\n";
  } catch (const MalformedInputError& e) {
    err << "bgclean: input error: " << e.what() << "\n";
  } catch (const LimitExceededError& e) {
    err << "bgclean: limit exceeded: " << e.what() << "\n";
  } catch (const InternalConsistencyError& e) {
    err << "bgclean: internal error: " << e.what() << "\n";
    return kExitInternalError;
  }
  return kExitInputError;
}

}  // namespace bgc::cli
