// Copyright 2026 The ncgkit Authors
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

#include "ncg/a_sets.hpp"
#include "ncg/constructions.hpp"
#include "ncg/deviation.hpp"
#include "ncg/distance_uniformity.hpp"
#include "ncg/search.hpp"

namespace {

void BM_BestResponse(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto s = ncg::random_profile(n, 0.3, 7);
  const ncg::Game game(n, ncg::Rational(2));
  for (auto _ : state) benchmark::DoNotOptimize(ncg::best_response(game, s, 0));
}
BENCHMARK(BM_BestResponse)->DenseRange(6, 12, 2);

void BM_VerifyCliqueOfStars(benchmark::State& state) {
  const auto s = ncg::clique_of_stars(3, 3);
  const ncg::Game game(9, ncg::Rational(3));
  for (auto _ : state) benchmark::DoNotOptimize(ncg::verify_equilibrium(game, s, ncg::DeviationClass::kExact));
}
BENCHMARK(BM_VerifyCliqueOfStars)->Unit(benchmark::kMillisecond);

void BM_EnumerateTrees(benchmark::State& state) {
  ncg::ExperimentConfig c;
  c.n_values = {static_cast<int>(state.range(0))};
  c.alphas = {ncg::Rational(2)};
  c.family = ncg::ProfileFamily::kTrees;
  for (auto _ : state) benchmark::DoNotOptimize(ncg::enumerate_equilibria(c));
}
BENCHMARK(BM_EnumerateTrees)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_AllPairsDistances(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = ncg::OwnedGraph(ncg::random_profile(n, 4.0 / n, 3)).graph();
  for (auto _ : state) benchmark::DoNotOptimize(ncg::DistanceTable(g));
}
BENCHMARK(BM_AllPairsDistances)->RangeMultiplier(2)->Range(8, 64);

void BM_UniformityCertificate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = ncg::OwnedGraph(ncg::random_biconnected(n, 5)).graph();
  for (auto _ : state) {
    benchmark::DoNotOptimize(ncg::uniformity_certificate(g, ncg::Rational(2), ncg::Rational(1, 4)));
  }
}
BENCHMARK(BM_UniformityCertificate)->Arg(12)->Arg(24)->Arg(48);

void BM_ASetFamily(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ncg::OwnedGraph g(ncg::random_biconnected(n, 9));
  ncg::Node v = 0;
  while (g.profile().purchases(v) == 0) ++v;
  const ncg::Node u = v == 0 ? 1 : 0;
  for (auto _ : state) benchmark::DoNotOptimize(ncg::a_set_family(g, v, g.profile().purchases(v), u));
}
BENCHMARK(BM_ASetFamily)->Arg(12)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
