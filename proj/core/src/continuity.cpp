#include "discont/continuity.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace discont {

namespace {

void require_slack(double v, const char* name) {
  if (!(v >= 0.0) || !std::isfinite(v)) {
    throw std::invalid_argument(std::string(name) +
                                " must be a finite nonnegative real");
  }
}

}  // namespace

FuzzyParams::FuzzyParams(double q_, double r_) : q(q_), r(r_) {
  require_slack(q, "q");
  require_slack(r, "r");
}

double defect_at(const SampledFunction& f, double a, double q) {
  require_slack(q, "q");
  const auto idx = f.domain().index_of(a);
  if (!idx) {
    std::ostringstream os;
    os << "point " << a << " is not in the sample domain";
    throw Error(Errc::point_not_in_domain, os.str());
  }
  const auto& xs = f.domain().points();
  const auto& ys = f.values();
  const double fa = ys[*idx];
  double defect = 0.0;
  for (std::size_t j = *idx; j > 0;) {
    --j;
    if (a - xs[j] > q) break;
    defect = std::max(defect, std::abs(ys[j] - fa));
  }
  for (std::size_t j = *idx + 1; j < xs.size(); ++j) {
    if (xs[j] - a > q) break;
    defect = std::max(defect, std::abs(ys[j] - fa));
  }
  return defect;
}

DefectProfile defect_profile(const SampledFunction& f, double q) {
  require_slack(q, "q");
  const auto& xs = f.domain().points();
  const auto& ys = f.values();
  const std::size_t n = xs.size();

  DefectProfile profile;
  profile.per_point.reserve(n);

  // Sliding window [x_i - q, x_i + q]; both ends advance monotonically
  // with i, so running min/max deques give O(n) overall.
  std::deque<std::size_t> maxdq;
  std::deque<std::size_t> mindq;
  std::size_t hi = 0;
  std::size_t lo = 0;
  double global = 0.0;
  double attained_at = xs.empty() ? 0.0 : xs.front();

  for (std::size_t i = 0; i < n; ++i) {
    while (hi < n && xs[hi] - xs[i] <= q) {
      while (!maxdq.empty() && ys[maxdq.back()] <= ys[hi]) maxdq.pop_back();
      maxdq.push_back(hi);
      while (!mindq.empty() && ys[mindq.back()] >= ys[hi]) mindq.pop_back();
      mindq.push_back(hi);
      ++hi;
    }
    while (xs[i] - xs[lo] > q) {
      if (!maxdq.empty() && maxdq.front() == lo) maxdq.pop_front();
      if (!mindq.empty() && mindq.front() == lo) mindq.pop_front();
      ++lo;
    }
    const double d =
        std::max(ys[maxdq.front()] - ys[i], ys[i] - ys[mindq.front()]);
    profile.per_point.push_back(PointDefect{xs[i], d});
    if (d > global) {
      global = d;
      attained_at = xs[i];
    }
  }
  profile.global = global;
  profile.attained_at = attained_at;
  return profile;
}

bool is_qr_continuous_at(const SampledFunction& f, double a,
                         const FuzzyParams& params) {
  require_slack(params.q, "q");
  require_slack(params.r, "r");
  return defect_at(f, a, params.q) <= params.r;
}

bool is_qr_continuous(const SampledFunction& f, const FuzzyParams& params) {
  require_slack(params.q, "q");
  require_slack(params.r, "r");
  return defect_profile(f, params.q).global <= params.r;
}

std::optional<double> trivial_continuity_bound(const DiscreteSet& set) {
  return set.stats().lib;
}

GapCertificate gap_certificate(const SampledFunction& f) {
  const MonotoneClass cls = monotone_class(f);
  if (cls == MonotoneClass::neither) {
    throw Error(Errc::not_strictly_monotone,
                "gap certificate requires a strictly monotone sample");
  }
  GapCertificate cert;
  cert.monotone = cls;
  const auto& xs = f.domain().points();
  const auto& ys = f.values();
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    cert.domain_gap_sup = std::max(cert.domain_gap_sup, xs[i + 1] - xs[i]);
    // Values are consecutive in sorted order for monotone samples.
    cert.image_gap_sup =
        std::max(cert.image_gap_sup, std::abs(ys[i + 1] - ys[i]));
  }
  return cert;
}

}  // namespace discont
