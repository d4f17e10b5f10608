#pragma once

#include <cstdint>
#include <optional>

#include "discont/continuity.hpp"
#include "discont/discrete_set.hpp"
#include "discont/sampled_function.hpp"

namespace discont {

enum class GuaranteeKind { exact, fuzzy };

const char* guarantee_label(GuaranteeKind g) noexcept;

/// Result of an intermediate-value solve. location is always a domain
/// point; residual is |f(location) - target| recomputed from the stored
/// samples; exact witnesses have residual 0. interior reports whether
/// a < location < b strictly (endpoint hits are accepted and flagged).
struct Witness {
  double location = 0.0;
  double residual = 0.0;
  GuaranteeKind guarantee = GuaranteeKind::fuzzy;
  std::optional<double> fuzzy_bound;  // residual bound; set when fuzzy
  bool interior = false;
};

/// Codomain description for the exact discrete solver: either the
/// uniform grid {k*spacing : k integer} or an explicit set. lib() is the
/// spacing for uniform grids, the min adjacent distance for explicit
/// sets, and disengaged for an explicit singleton (no pair constrains
/// the solver, so any r is admissible).
class CodomainGrid {
 public:
  static CodomainGrid uniform(double spacing, bool must_contain_zero = false);
  static CodomainGrid explicit_set(DiscreteSet points,
                                   bool must_contain_zero = false);

  bool contains(double y) const noexcept;
  std::optional<double> lib() const;
  bool must_contain_zero() const noexcept { return must_contain_zero_; }

  bool is_uniform() const noexcept { return !points_.has_value(); }
  double spacing() const noexcept { return spacing_; }
  const std::optional<DiscreteSet>& points() const noexcept { return points_; }

 private:
  CodomainGrid() = default;

  double spacing_ = 0.0;
  std::optional<DiscreteSet> points_;
  bool must_contain_zero_ = false;
};

/// Fuzzy intermediate-value search: for a target between f(a) and f(b)
/// (either orientation, endpoints included), scans adjacent sample pairs
/// in [a, b] for a sign change of f - target and returns the bracketing
/// endpoint with the smallest residual (ties resolve to the smaller x).
/// The residual never exceeds half the largest adjacent value jump
/// inside [a, b], which is reported as fuzzy_bound.
Witness fuzzy_intermediate(const SampledFunction& f, double a, double b,
                           double target);

/// Exact discrete intermediate-value solve. Preconditions, each reported
/// as PreconditionError(which) when violated:
///   - a and b are domain points with a < b,
///   - q >= max adjacent distance of the domain restricted to [a, b],
///   - codomain lib >= r,
///   - f is (q, r)-continuous on its whole domain,
///   - every sample value and the target lie on the codomain grid,
///   - target is between f(a) and f(b) (endpoints included),
///   - the codomain contains 0 when the grid demands it.
/// Under these the bracket scan provably lands on a point with
/// f(c) == target exactly.
Witness discrete_intermediate(const SampledFunction& f,
                              const CodomainGrid& codomain, double a, double b,
                              double target, const FuzzyParams& params);

/// Integer-grid special case: domain is a run of consecutive integers
/// containing m < n, values are integers with |f(k+1) - f(k)| <= 1, and
/// the target lies strictly between f(m) and f(n). Returns the smallest
/// c with m < c < n and f(c) == target.
Witness digital_intermediate(const SampledFunction& f, std::int64_t m,
                             std::int64_t n, std::int64_t target);

}  // namespace discont
