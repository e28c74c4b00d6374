// Copyright 2026 The gridcube Authors
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

#include "generators.hpp"
#include "gridcube/core.hpp"
#include "gridcube/games.hpp"
#include "gridcube/glcp.hpp"
#include "gridcube/parallel.hpp"
#include "gridcube/uso.hpp"

namespace gridcube {
namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::kSerial : Exec::kParallel; }

GLCPInstance nondegenerate_k_glcp(const BlockType& type, unsigned seed) {
  testing::Generator gen(seed);
  for (;;) {
    GLCPInstance inst = gen.glcp(gen.k_matrix(type, 3), 3);
    if (testing::nondegenerate(inst)) return inst;
  }
}

void BM_BruteForceSolve(benchmark::State& state) {
  testing::Generator gen(7);
  const GLCPInstance inst = gen.glcp(gen.block_matrix(BlockType({3, 3, 3, 3, 3}), 3), 3);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_solve(inst, exec_of(state)));
}

void BM_IsPMatrix(benchmark::State& state) {
  testing::Generator gen(8);
  const BlockMatrix m = gen.k_matrix(BlockType({3, 3, 3, 3}), 3);
  for (auto _ : state) benchmark::DoNotOptimize(is_p_matrix(m, exec_of(state)));
}

void BM_UsoFromGlcp(benchmark::State& state) {
  const GLCPInstance inst = nondegenerate_k_glcp(BlockType({2, 2, 2, 2, 2}), 9);
  for (auto _ : state) benchmark::DoNotOptimize(uso_from_glcp(inst, exec_of(state)));
}

void BM_BruteForceGame(benchmark::State& state) {
  testing::Generator gen(10);
  StochasticGame g;
  g.mdp = DiscountedMDP{gen.stochastic(BlockType({3, 3, 3, 3, 3})), gen.vector(15, 3), Rational(9, 10)};
  for (std::size_t j = 0; j < 5; ++j) g.owner.push_back(j % 2 == 0 ? Owner::kMax : Owner::kMin);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_game(g, exec_of(state)));
}

// Argument 0 is the serial reference, 1 the OpenMP kernel.
BENCHMARK(BM_BruteForceSolve)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IsPMatrix)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_UsoFromGlcp)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteForceGame)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace gridcube

BENCHMARK_MAIN();
