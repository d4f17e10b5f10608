#pragma once

#include <cstddef>
#include <vector>

#include "discont/sampled_function.hpp"

namespace discont::testing {

// x^3 sampled on [0, 2] at 1/steps_per_unit resolution; grid points are
// i / steps_per_unit so that decimal abscissas like 1.0 land exactly on
// representable doubles.
inline SampledFunction cubic_fixture(int steps_per_unit = 1000) {
  const auto n = static_cast<std::size_t>(2 * steps_per_unit);
  std::vector<double> xs(n + 1);
  std::vector<double> ys(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    const double x = static_cast<double>(i) / steps_per_unit;
    xs[i] = x;
    ys[i] = x * x * x;
  }
  return SampledFunction::from_samples(
      DiscreteSet::from_values(std::move(xs), 0.0), std::move(ys));
}

// x^3 on [0, 1/2], identity beyond, sampled on [0, 1]. The jump in the
// sampled values at 0.5 is 0.375 + 1/steps_per_unit.
inline SampledFunction piecewise_cubic_fixture(int steps_per_unit = 1000) {
  const auto n = static_cast<std::size_t>(steps_per_unit);
  std::vector<double> xs(n + 1);
  std::vector<double> ys(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    const double x = static_cast<double>(i) / steps_per_unit;
    xs[i] = x;
    ys[i] = x <= 0.5 ? x * x * x : x;
  }
  return SampledFunction::from_samples(
      DiscreteSet::from_values(std::move(xs), 0.0), std::move(ys));
}

// Identity with a +0.3 offset from 0.5 on, sampled at step 0.01 on [0, 1].
inline SampledFunction jump_fixture() {
  std::vector<double> xs(101);
  std::vector<double> ys(101);
  for (std::size_t i = 0; i <= 100; ++i) {
    const double x = static_cast<double>(i) / 100.0;
    xs[i] = x;
    ys[i] = x < 0.5 ? x : x + 0.3;
  }
  return SampledFunction::from_samples(
      DiscreteSet::from_values(std::move(xs), 0.0), std::move(ys));
}

}  // namespace discont::testing
