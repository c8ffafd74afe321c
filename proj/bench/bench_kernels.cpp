// Serial reference vs OpenMP sweeps. Arg 0 = Serial, 1 = Parallel.

#include "bidisk/jobs.hpp"
#include "bidisk/kernels.hpp"
#include "bidisk/selftest.hpp"

#include <benchmark/benchmark.h>

namespace {

bidisk::ExecutionPolicy policy(const benchmark::State& state) {
  return state.range(0) == 0 ? bidisk::ExecutionPolicy::Serial : bidisk::ExecutionPolicy::Parallel;
}

void label(benchmark::State& state) {
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel x" + std::to_string(bidisk::parallel_width()));
}

void BM_ExampleJobs(benchmark::State& state) {
  const auto jobs = bidisk::load_job_file(std::filesystem::path(BIDISK_DATA_DIR) / "example_jobs.json");
  for (auto _ : state) benchmark::DoNotOptimize(bidisk::run_jobs(jobs, policy(state)));
  label(state);
}

void BM_HirzebruchGrid(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bidisk::hirzebruch_grid_mismatches(20, 40, policy(state)));
  label(state);
}

void BM_ClassifyFuzz(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bidisk::classify_fuzz(policy(state)));
  label(state);
}

void BM_NilpotentSynthesis(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bidisk::nilpotent_synthesis_property(200, 1, policy(state)));
  label(state);
}

}  // namespace

BENCHMARK(BM_ExampleJobs)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HirzebruchGrid)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassifyFuzz)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NilpotentSynthesis)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
