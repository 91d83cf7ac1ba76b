// Serial vs OpenMP sweep kernels on a representative workload: FD metric
// validation of the qubit closed form over a (q, w) grid.

#include <benchmark/benchmark.h>

#include "qig/divergences.hpp"
#include "qig/metrics.hpp"
#include "qig/oracle.hpp"
#include "qig/sweep.hpp"

namespace {

struct Pt {
  double q, w;
};

std::vector<Pt> make_grid(int nq, int nw) {
  std::vector<Pt> grid;
  for (int i = 0; i < nq; ++i)
    for (int j = 0; j < nw; ++j)
      grid.push_back({0.1 + 0.8 * i / (nq - 1.0), 0.1 + 0.8 * j / (nw - 1.0)});
  return grid;
}

double worst_rel_err(const Pt& p) {
  static thread_local qig::Chart chart = qig::qubit_exp_chart();
  qig::FDScheme scheme;
  auto d = qig::Divergence::make(qig::DivergenceKind::QuantumTsallisRescaled,
                                 p.q);
  qig::RealVector x(4);
  x << p.w, 0, 0, 0;
  qig::MetricTensor fd = qig::metric_fd(d, chart, x, scheme);
  qig::MetricTensor closed = qig::qubit_metric(p.q, p.w);
  double worst = 0.0;
  for (int i = 0; i < 3; ++i)
    worst = std::max(worst, std::abs(fd.components(i, i) -
                                     closed.components(i, i)));
  return worst;
}

void BM_sweep_serial(benchmark::State& state) {
  auto grid = make_grid(static_cast<int>(state.range(0)),
                        static_cast<int>(state.range(0)));
  std::function<double(const Pt&)> eval = worst_rel_err;
  for (auto _ : state) {
    auto out = qig::sweep_serial(grid, eval);
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(grid.size()));
}

void BM_sweep_parallel(benchmark::State& state) {
  auto grid = make_grid(static_cast<int>(state.range(0)),
                        static_cast<int>(state.range(0)));
  std::function<double(const Pt&)> eval = worst_rel_err;
  for (auto _ : state) {
    auto out = qig::sweep_parallel(grid, eval);
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(grid.size()));
}

BENCHMARK(BM_sweep_serial)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sweep_parallel)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
