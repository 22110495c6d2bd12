// Serial reference vs OpenMP kernels.  On a single core the two should
// match; the parallel versions only pay off with HSR_THREADS / OMP threads.

#include <benchmark/benchmark.h>

#include <cmath>

#include "hsr/bound_lab.hpp"
#include "hsr/campaign.hpp"

namespace {

hsr::ContourSpec edge(int n, int samples) {
  return {hsr::ContourSpec::Kind::left_edge, 3, n, -std::sqrt(2.0) * n, std::sqrt(2.0) * n, std::sqrt(2.0), samples};
}

void BM_RoucheSerial(benchmark::State& state) {
  const auto spec = edge(static_cast<int>(state.range(0)), 20001);
  for (auto _ : state) benchmark::DoNotOptimize(hsr::rouche_margin_serial(spec));
}

void BM_RoucheParallel(benchmark::State& state) {
  const auto spec = edge(static_cast<int>(state.range(0)), 20001);
  for (auto _ : state) benchmark::DoNotOptimize(hsr::rouche_margin(spec));
}

hsr::CampaignConfig campaign(int threads) {
  hsr::CampaignConfig c;
  c.d_min = 4;
  c.d_max = 5;
  c.certify = true;
  c.threads = threads;
  return c;
}

void BM_CampaignSerial(benchmark::State& state) {
  const auto c = campaign(1);
  for (auto _ : state) benchmark::DoNotOptimize(hsr::run_campaign_serial(c));
}

void BM_CampaignParallel(benchmark::State& state) {
  const auto c = campaign(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hsr::run_campaign(c));
}

}  // namespace

BENCHMARK(BM_RoucheSerial)->Arg(30)->Arg(120)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RoucheParallel)->Arg(30)->Arg(120)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CampaignSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CampaignParallel)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
