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


#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "bgc/fpt.hpp"
#include "bgc/generators.hpp"
#include "bgc/instance.hpp"
#include "bgc/local_lp.hpp"

namespace {

bgc::Instance make(bgc::Family family, int n, std::uint64_t seed) {
  bgc::GeneratorOptions options;
  options.family = family;
  options.n = n;
  options.modulus = 3;
  options.seed = seed;
  return bgc::build_instance(bgc::generate_instance(options));
}

bgc::Vertex root_of(const bgc::Instance& inst) {
  return inst.spec.root.value_or(0);
}

void BM_Separate(benchmark::State& state) {
  const auto inst = make(bgc::Family::kCyclic, static_cast<int>(state.range(0)), 7);
  const auto x = bgc::FractionalAssignment::zero(inst.graph.num_vertices(),
                                                root_of(inst));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bgc::separate(inst.graph, *inst.oracle, x));
  }
}
BENCHMARK(BM_Separate)->Arg(8)->Arg(16)->Arg(32);

void BM_LocalLp(benchmark::State& state) {
  const auto inst = make(bgc::Family::kCyclic, static_cast<int>(state.range(0)), 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        bgc::solve_local_lp(inst.graph, *inst.oracle, root_of(inst), inst.costs));
  }
}
BENCHMARK(BM_LocalLp)->Arg(8)->Arg(12)->Arg(16);

void BM_SolveLocal(benchmark::State& state) {
  const auto inst = make(bgc::Family::kApex, static_cast<int>(state.range(0)), 3);
  const int n = inst.graph.num_vertices();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        bgc::solve_local(inst.graph, *inst.oracle, root_of(inst), n));
  }
}
BENCHMARK(BM_SolveLocal)->Arg(8)->Arg(10)->Arg(12);

void BM_SolveGlobal(benchmark::State& state) {
  const auto inst = make(bgc::Family::kOct, static_cast<int>(state.range(0)), 5);
  const int k = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bgc::solve_global(inst.graph, *inst.oracle, k));
  }
}
BENCHMARK(BM_SolveGlobal)->Args({8, 2})->Args({10, 3});

}  // namespace

BENCHMARK_MAIN();
