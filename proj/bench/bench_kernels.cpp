// Serial reference path vs OpenMP path for each parallel kernel.
#include <benchmark/benchmark.h>

#include <random>

#include "levitanaka/classify/classify.hpp"
#include "levitanaka/corpus/corpus.hpp"
#include "levitanaka/prolongation/prolongation.hpp"
#include "levitanaka/quadric/quadric.hpp"

using namespace levitanaka;

namespace {

Execution mode(const benchmark::State& s) { return s.range(0) ? Execution::Parallel : Execution::Serial; }

QMatrix random_matrix(std::size_t n) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-9, 9);
  QMatrix m(n, n + 3);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = Rational(d(rng), 1 + std::abs(d(rng)));
  return m;
}

const lie::GradedLieAlgebra& counterexample_algebra() {
  static const auto g = corpus::materialize(corpus::dimension_counterexample());
  return g;
}

void BM_RowReduce(benchmark::State& s) {
  const auto m = random_matrix(s.range(1));
  for (auto _ : s) benchmark::DoNotOptimize(row_reduce(m, mode(s)));
}
BENCHMARK(BM_RowReduce)->ArgsProduct({{0, 1}, {16, 32}})->Unit(benchmark::kMillisecond);

void BM_Jacobi(benchmark::State& s) {
  const auto& g = counterexample_algebra();
  for (auto _ : s) benchmark::DoNotOptimize(lie::check_jacobi(g, mode(s)));
}
BENCHMARK(BM_Jacobi)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Killing(benchmark::State& s) {
  const auto& g = counterexample_algebra();
  for (auto _ : s) benchmark::DoNotOptimize(lie::killing_form(g, mode(s)));
}
BENCHMARK(BM_Killing)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ProlongHeisenberg(benchmark::State& s) {
  GMatrix a(3, 3);
  a(0, 0) = 1, a(1, 1) = 1, a(2, 2) = -1;
  const auto m = quadric::build_m_minus({3, 1, {a}});
  for (auto _ : s) benchmark::DoNotOptimize(prolongation::prolong(m, 6, mode(s)));
}
BENCHMARK(BM_ProlongHeisenberg)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Tables(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(classify::regenerate_tables(8, mode(s)));
}
BENCHMARK(BM_Tables)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
