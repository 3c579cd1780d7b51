#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "tdual/abelian/group_ops.hpp"
#include "tdual/parallel/coset_enumeration.hpp"
#include "tdual/report/batch.hpp"
#include "tdual/report/job.hpp"

using namespace tdual;

namespace {

// Z + Z/2 + Z/6 + Z/n modulo a generator with a free coordinate: the
// quotient is finite of order 12 n.
struct CosetCase {
  FgGroup ambient;
  Quotient quotient;
  explicit CosetCase(long n)
      : ambient(1, {Int(2), Int(6), Int(n)}),
        quotient(quotient_by(ambient, {GroupElement(ambient, {1, 1, 3, 1})})) {}
};

void BM_CosetsSerial(benchmark::State& state) {
  CosetCase c(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(coset_representatives_serial(c.quotient, c.ambient));
}

void BM_CosetsParallel(benchmark::State& state) {
  CosetCase c(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(coset_representatives(c.quotient, c.ambient));
}

std::vector<JobSpec> sample_jobs(int copies) {
  std::ifstream in(TDUAL_SAMPLE_JOBS);
  std::stringstream ss;
  ss << in.rdbuf();
  std::vector<JobSpec> one = parse_jobs_text(ss.str());
  std::vector<JobSpec> all;
  for (int i = 0; i < copies; ++i) all.insert(all.end(), one.begin(), one.end());
  return all;
}

void BM_JobsSerial(benchmark::State& state) {
  auto jobs = sample_jobs(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_jobs_serial(jobs));
}

void BM_JobsParallel(benchmark::State& state) {
  auto jobs = sample_jobs(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_jobs(jobs));
}

}  // namespace

BENCHMARK(BM_CosetsSerial)->Arg(12)->Arg(120)->Arg(1200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CosetsParallel)->Arg(12)->Arg(120)->Arg(1200)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_JobsSerial)->Arg(1)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_JobsParallel)->Arg(1)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
