// Copyright 2026 The sigraph Authors
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

#include <random>
#include <vector>

#include "benchmark/benchmark.h"
#include "sigraph/chromatic.h"
#include "sigraph/gadget.h"
#include "sigraph/interval.h"
#include "sigraph/random.h"
#include "sigraph/sclique.h"
#include "sigraph/signature.h"
#include "sigraph/signed_graph.h"
#include "sigraph/signed_interval.h"

namespace sigraph {
namespace {

std::vector<SignedIntervalInstance> IntervalInstances(int n, int count) {
  std::mt19937_64 rng(n);
  std::vector<SignedIntervalInstance> out;
  for (int i = 0; i < count; ++i) {
    IntervalRepresentation rep = RandomIntervals(rng, n);
    const SignedGraph sg = RandomSignature(rng, GraphFromIntervals(rep));
    out.emplace_back(std::move(rep), sg.signature());
  }
  return out;
}

void BM_MaxSClique(benchmark::State& state) {
  const auto instances = IntervalInstances(state.range(0), 16);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(MaxSClique(instances[i++ % instances.size()]));
  }
}
BENCHMARK(BM_MaxSClique)->RangeMultiplier(2)->Range(8, 128);

void BM_AuxiliaryCliqueBruteforce(benchmark::State& state) {
  const auto instances = IntervalInstances(state.range(0), 16);
  std::size_t i = 0;
  for (auto _ : state) {
    const SignedIntervalInstance& inst = instances[i++ % instances.size()];
    benchmark::DoNotOptimize(MaxCliqueBruteforce(AuxiliaryGraph(inst.sg())));
  }
}
BENCHMARK(BM_AuxiliaryCliqueBruteforce)->DenseRange(8, 20, 4);

void BM_CheckBalance(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const SignedGraph sg = RandomSignedGraph(rng, state.range(0), 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(CheckBalance(sg));
}
BENCHMARK(BM_CheckBalance)->RangeMultiplier(4)->Range(16, 1024);

void BM_SignedChromaticNumber(benchmark::State& state) {
  std::mt19937_64 rng(5);
  std::vector<SignedGraph> graphs;
  for (int i = 0; i < 8; ++i) graphs.push_back(RandomSignedGraph(rng, state.range(0), 0.5));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(SignedChromaticNumber(graphs[i++ % graphs.size()]));
  }
}
BENCHMARK(BM_SignedChromaticNumber)->DenseRange(6, 12, 2);

void BM_GadgetExact(benchmark::State& state) {
  const GadgetInstance inst = BuildGadget(state.range(0), {});
  for (auto _ : state) benchmark::DoNotOptimize(SignedChromaticNumber(inst.sg));
}
BENCHMARK(BM_GadgetExact)->DenseRange(2, 4);

void BM_MinSignatureExact(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const SignedGraph sg = RandomSignedGraph(rng, state.range(0), 0.4);
  for (auto _ : state) benchmark::DoNotOptimize(MinSignatureExact(sg));
}
BENCHMARK(BM_MinSignatureExact)->DenseRange(10, 18, 4);

void BM_MinSignatureLocalSearch(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const SignedGraph sg = RandomSignedGraph(rng, state.range(0), 0.4);
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(MinSignatureLocalSearch(sg, seed++));
}
BENCHMARK(BM_MinSignatureLocalSearch)->RangeMultiplier(4)->Range(16, 256);

}  // namespace
}  // namespace sigraph

BENCHMARK_MAIN();
