#include <benchmark/benchmark.h>

#include "mwt/oracle.hpp"
#include "mwt/rotor.hpp"
#include "mwt/solver.hpp"

namespace {

mwt::Polygon double_notch() {
  return mwt::Polygon::from_points(
      {{0, 0}, {5, 0}, {6, 4}, {7, 0}, {8, 0}, {8, 6}, {3, 6}, {2, 2}, {1, 6}, {0, 6}});
}

void BM_SolveDouble(benchmark::State& state) {
  const mwt::Polygon p = double_notch();
  for (auto _ : state) benchmark::DoNotOptimize(mwt::solve_theta(p, mwt::Angle(10.0)).tour.length);
}
BENCHMARK(BM_SolveDouble);

void BM_SolveCorpus(benchmark::State& state) {
  const auto corpus = mwt::random_corpus(99, 32);
  size_t i = 0;
  for (auto _ : state) {
    const mwt::Polygon& p = corpus[i++ % corpus.size()];
    try {
      benchmark::DoNotOptimize(mwt::solve_theta(p, mwt::Angle(13.7)).tour.length);
    } catch (const mwt::EventAngleError&) {
    }
  }
}
BENCHMARK(BM_SolveCorpus);

void BM_OptimizeDouble(benchmark::State& state) {
  const mwt::Polygon p = double_notch();
  for (auto _ : state) benchmark::DoNotOptimize(mwt::optimize(p).best_length);
}
BENCHMARK(BM_OptimizeDouble)->Unit(benchmark::kMillisecond);

void BM_ReferenceTour(benchmark::State& state) {
  const mwt::Polygon p = double_notch();
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mwt::reference_min_tour(p, mwt::Angle(10.0), m));
}
BENCHMARK(BM_ReferenceTour)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
