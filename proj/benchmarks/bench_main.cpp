// Copyright 2026 The fdsec Authors
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

#include "fdsec/channel.hpp"
#include "fdsec/monte_carlo.hpp"
#include "fdsec/multi_relay.hpp"
#include "fdsec/random_stream.hpp"
#include "fdsec/single_relay.hpp"

namespace {

using namespace fdsec;

void BM_Philox(benchmark::State& state) {
  RandomStream s(1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(s.next_u64());
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Philox);

void BM_SampleRealization(benchmark::State& state) {
  const auto b = LinkBudget::from_db({30, 30, 10, 10, 0}, static_cast<int>(state.range(0)));
  RandomStream s(1, 0);
  ChannelRealization r;
  for (auto _ : state) {
    sample_realization_into(b, s, r);
    benchmark::DoNotOptimize(r.se);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_SampleRealization)->Arg(1)->Arg(4)->Arg(16);

void BM_HybridSelection(benchmark::State& state) {
  const auto b = LinkBudget::from_db({30, 30, 10, 10, 0}, 4);
  RandomStream s(2, 0);
  const auto r = sample_realization(b, s);
  for (auto _ : state) benchmark::DoNotOptimize(select_hybrid(r).sample.sc);
}
BENCHMARK(BM_HybridSelection);

void BM_EstimateSop(benchmark::State& state) {
  const auto b = LinkBudget::from_db({40, 40, 10, 10, 10});
  EstimatorConfig cfg;
  cfg.n_samples = static_cast<std::uint64_t>(state.range(0));
  cfg.workers = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate_sop({SchemeId::kSbj, 0.5}, b, TargetRate(1.0), cfg));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EstimateSop)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
