#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "discont/connect.hpp"
#include "discont/continuity.hpp"
#include "discont/sampled_function.hpp"
#include "discont/solver.hpp"

namespace {

using namespace discont;

SampledFunction dense_cubic(std::size_t n) {
  std::vector<double> xs(n);
  std::vector<double> ys(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = 2.0 * static_cast<double>(i) / static_cast<double>(n - 1);
    xs[i] = x;
    ys[i] = x * x * x;
  }
  return SampledFunction::from_samples(DiscreteSet::from_values(xs, 0.0), ys);
}

void BM_defect_profile(benchmark::State& state) {
  const auto f = dense_cubic(static_cast<std::size_t>(state.range(0)));
  const double q = 0.03;
  for (auto _ : state) {
    benchmark::DoNotOptimize(defect_profile(f, q).global);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_defect_profile)->Arg(2001)->Arg(20001)->Arg(200001);

void BM_exact_solve(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<double> xs(n);
  std::vector<double> ys(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = 0.5 * static_cast<double>(i);
    ys[i] = 0.25 * static_cast<double>(i / 2);  // unit grid steps, spread out
  }
  const auto f =
      SampledFunction::from_samples(DiscreteSet::from_values(xs, 0.0), ys);
  const auto grid = CodomainGrid::uniform(0.25);
  const FuzzyParams params(1.0, 0.25);
  const double target = 0.25 * static_cast<double>((n - 1) / 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        discrete_intermediate(f, grid, xs.front(), xs.back(), target, params)
            .location);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_exact_solve)->Arg(1000)->Arg(100000);

void BM_step_eval(benchmark::State& state) {
  const StepExtension g(dense_cubic(10001));
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-0.5, 2.5);
  double x = dist(rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(g(x));
    x = dist(rng);
  }
}
BENCHMARK(BM_step_eval);

void BM_r_components(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> gap(0.1, 2.0);
  std::vector<double> pts(n);
  double x = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    pts[i] = x;
    x += gap(rng);
  }
  const auto subset = RealSubset::from_points(pts);
  for (auto _ : state) {
    benchmark::DoNotOptimize(r_components(subset, 1.0).components.size());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_r_components)->Arg(1000)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
