#pragma once

#include <optional>
#include <vector>

#include "discont/discrete_set.hpp"
#include "discont/sampled_function.hpp"

namespace discont {

/// The (q, r) pair of a fuzzy-continuity statement: inputs within q of
/// each other may move the output by at most r. Both slacks are
/// nonnegative; r-continuity is the q = 0 case.
struct FuzzyParams {
  double q = 0.0;
  double r = 0.0;

  FuzzyParams() = default;
  FuzzyParams(double q_, double r_);
};

struct PointDefect {
  double point = 0.0;
  double defect = 0.0;
};

/// Per-point continuity defects and their maximum. global is the minimal
/// r such that the sample is (q, r)-continuous on its whole domain.
struct DefectProfile {
  std::vector<PointDefect> per_point;
  double global = 0.0;
  double attained_at = 0.0;  // leftmost point whose defect equals global
};

/// Minimal r such that the sample is (q, r)-continuous at the domain
/// point a: the maximum of |f(x) - f(a)| over domain points x with
/// |x - a| <= q. Comparisons against q are exact floating-point
/// comparisons; callers worried about decimal-boundary roundoff should
/// inflate q by their own epsilon.
double defect_at(const SampledFunction& f, double a, double q);

DefectProfile defect_profile(const SampledFunction& f, double q);

/// defect_at(f, a, q) <= r. The epsilon-delta form of (q, r)-continuity
/// collapses to this closed ball test on finite samples.
bool is_qr_continuous_at(const SampledFunction& f, double a,
                         const FuzzyParams& params);

/// Whole-domain verdict: defect_profile(f, q).global <= r.
bool is_qr_continuous(const SampledFunction& f, const FuzzyParams& params);

/// lib of the set: every function on the set is (q, r)-continuous for
/// every r >= 0 whenever q is below this bound. Undefined (empty) for
/// singletons, where every q works.
std::optional<double> trivial_continuity_bound(const DiscreteSet& set);

/// Gap-structure continuity certificate for a strictly monotone sample.
/// domain_gap_sup / image_gap_sup are the largest interior gap lengths
/// of the domain and of the image. Any strictly monotone underlying
/// function whose domain gaps stay <= domain_gap_sup and whose image
/// gaps stay <= image_gap_sup is r-continuous for every r strictly
/// above image_gap_sup.
struct GapCertificate {
  double domain_gap_sup = 0.0;
  double image_gap_sup = 0.0;
  MonotoneClass monotone = MonotoneClass::strictly_increasing;
};

GapCertificate gap_certificate(const SampledFunction& f);

}  // namespace discont
