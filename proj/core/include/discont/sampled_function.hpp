#pragma once

#include <utility>
#include <vector>

#include "discont/discrete_set.hpp"
#include "discont/errors.hpp"

namespace discont {

enum class MonotoneClass {
  strictly_increasing,
  strictly_decreasing,
  neither,
};

const char* monotone_label(MonotoneClass m) noexcept;

/// A real function known only at the points of a DiscreteSet.
/// values()[i] is the sample at domain().points()[i]. Immutable; pure
/// operations; freely shareable across threads.
class SampledFunction {
 public:
  /// Sorts pairs by abscissa. Two x values within tol of each other are
  /// rejected as a duplicate abscissa.
  static SampledFunction from_pairs(
      std::vector<std::pair<double, double>> pairs, double tol = 0.0);

  /// Attaches values to an already-built domain (sizes must match).
  static SampledFunction from_samples(DiscreteSet domain,
                                      std::vector<double> values);

  const DiscreteSet& domain() const noexcept { return domain_; }
  const std::vector<double>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }

  /// Stored value at a domain point, matched exactly.
  double value_at(double x) const;

 private:
  SampledFunction(DiscreteSet domain, std::vector<double> values)
      : domain_(std::move(domain)), values_(std::move(values)) {}

  DiscreteSet domain_;
  std::vector<double> values_;
};

/// Exact classification over the stored values. A singleton classifies
/// as strictly increasing (vacuous quantifier), so it is invertible.
MonotoneClass monotone_class(const SampledFunction& f);

/// Inverse of a strictly monotone sample: domain is the sorted image and
/// g(f(x)) = x for every sample x. Involutive on strictly monotone input.
SampledFunction invert_monotone(const SampledFunction& f);

/// Piecewise-constant total extension of a sampled function: right
/// continuous steps, g(x) = f(a_k) for the greatest sample point
/// a_k <= x. Left of the first sample the extension clamps to the first
/// value, so g is defined on the whole real line.
class StepExtension {
 public:
  explicit StepExtension(SampledFunction base) : base_(std::move(base)) {}

  double eval(double x) const noexcept;
  double operator()(double x) const noexcept { return eval(x); }

  const SampledFunction& base() const noexcept { return base_; }

 private:
  SampledFunction base_;
};

}  // namespace discont
