#include <benchmark/benchmark.h>

#include <random>

#include "example.hpp"
#include "rwg/classic.hpp"
#include "rwg/query.hpp"
#include "rwg/relaxed.hpp"

namespace {

struct Workload {
  rwg::ReadCollection reads;
  rwg::ContextAssignment contexts;
  std::vector<std::string> patterns;
};

// reads sampled from one genome at the given coverage
Workload make_workload(std::size_t genome_len, std::size_t coverage) {
  std::mt19937_64 rng(genome_len * 31 + coverage);
  const std::string genome = rwg::testing::random_string(rng, genome_len, "ACGT");
  const std::size_t count = genome_len * coverage / 30;
  Workload w{rwg::ReadCollection(rwg::testing::sample_reads(rng, genome, count, 20, 40)), {}, {}};
  w.contexts = rwg::contexts_from_genome(w.reads, genome);
  for (int i = 0; i < 64; ++i) w.patterns.push_back(genome.substr(rwg::testing::uniform(rng, 0, genome_len - 12), 12));
  return w;
}

void BM_BuildRelaxed(benchmark::State& state) {
  const Workload w = make_workload(static_cast<std::size_t>(state.range(0)), 10);
  for (auto _ : state) benchmark::DoNotOptimize(rwg::build_relaxed(w.reads, w.contexts));
  state.counters["n"] = static_cast<double>(w.reads.total_length());
}

void BM_BuildBCR(benchmark::State& state) {
  const Workload w = make_workload(static_cast<std::size_t>(state.range(0)), 10);
  for (auto _ : state) benchmark::DoNotOptimize(rwg::build_bcr(w.reads));
}

void BM_Count(benchmark::State& state) {
  const Workload w = make_workload(static_cast<std::size_t>(state.range(0)), 10);
  const rwg::RelaxedIndex idx = rwg::build_relaxed(w.reads, w.contexts);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(rwg::count(idx, w.patterns[i++ % w.patterns.size()]));
  state.counters["rho"] = static_cast<double>(idx.bwt().rho());
}

void BM_LocateAll(benchmark::State& state) {
  const Workload w = make_workload(static_cast<std::size_t>(state.range(0)), 10);
  const rwg::RelaxedIndex idx = rwg::build_relaxed(w.reads, w.contexts);
  std::size_t i = 0;
  std::size_t found = 0;
  for (auto _ : state) {
    const auto occ = rwg::locate_all(idx, w.patterns[i++ % w.patterns.size()]);
    found += occ.size();
    benchmark::DoNotOptimize(occ.data());
  }
  state.counters["occ"] = benchmark::Counter(static_cast<double>(found), benchmark::Counter::kAvgIterations);
}

void BM_Certify(benchmark::State& state) {
  const Workload w = make_workload(static_cast<std::size_t>(state.range(0)), 10);
  const rwg::RelaxedIndex idx = rwg::build_relaxed(w.reads, w.contexts);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(rwg::certify(idx, w.patterns[i++ % w.patterns.size()]));
}

}  // namespace

BENCHMARK(BM_BuildRelaxed)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildBCR)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Count)->Arg(500)->Arg(2000)->Arg(8000);
BENCHMARK(BM_LocateAll)->Arg(500)->Arg(2000)->Arg(8000);
BENCHMARK(BM_Certify)->Arg(500)->Arg(2000)->Arg(8000);
BENCHMARK_MAIN();
