#include "discont/connect.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "discont/continuity.hpp"

namespace discont {

namespace {

void require_nonempty(const RealSubset& s) {
  if (s.empty()) {
    throw Error(Errc::empty_set, "operation requires a nonempty subset");
  }
}

void require_radius(double r) {
  if (!(r >= 0.0) || !std::isfinite(r)) {
    throw std::invalid_argument("r must be a finite nonnegative real");
  }
}

}  // namespace

RealSubset RealSubset::from_intervals(std::vector<ClosedInterval> pieces) {
  for (const auto& p : pieces) {
    if (!std::isfinite(p.lo) || !std::isfinite(p.hi)) {
      throw Error(Errc::nonfinite_value, "interval bounds must be finite");
    }
    if (p.lo > p.hi) {
      throw Error(Errc::invalid_interval,
                  "interval bounds must satisfy lo <= hi");
    }
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const ClosedInterval& a, const ClosedInterval& b) {
              return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
            });
  std::vector<ClosedInterval> merged;
  for (const auto& p : pieces) {
    if (!merged.empty() && p.lo <= merged.back().hi) {
      merged.back().hi = std::max(merged.back().hi, p.hi);
    } else {
      merged.push_back(p);
    }
  }
  return RealSubset(std::move(merged));
}

RealSubset RealSubset::from_points(const std::vector<double>& points) {
  std::vector<ClosedInterval> pieces;
  pieces.reserve(points.size());
  for (double p : points) {
    pieces.push_back(ClosedInterval{p, p});
  }
  return from_intervals(std::move(pieces));
}

double dist_to_set(double c, const RealSubset& a) {
  require_nonempty(a);
  if (!std::isfinite(c)) {
    throw std::invalid_argument("point must be finite");
  }
  const auto& pieces = a.pieces();
  auto it = std::lower_bound(
      pieces.begin(), pieces.end(), c,
      [](const ClosedInterval& p, double x) { return p.lo < x; });
  double best = std::numeric_limits<double>::infinity();
  if (it != pieces.end()) best = std::min(best, it->lo - c);
  if (it != pieces.begin()) {
    const auto& prev = *(it - 1);
    best = std::min(best, c <= prev.hi ? 0.0 : c - prev.hi);
  }
  return best;
}

bool is_r_connected(const RealSubset& c, double r) {
  require_nonempty(c);
  require_radius(r);
  const auto& pieces = c.pieces();
  for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
    if (pieces[i + 1].lo - pieces[i].hi > r) return false;
  }
  return true;
}

ComponentDecomposition r_components(const RealSubset& c, double r) {
  require_nonempty(c);
  require_radius(r);
  ComponentDecomposition decomp;
  decomp.r = r;
  const auto& pieces = c.pieces();
  std::vector<ClosedInterval> current{pieces.front()};
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    if (pieces[i].lo - pieces[i - 1].hi > r) {
      decomp.components.push_back(
          RealSubset::from_intervals(std::move(current)));
      current.clear();
    }
    current.push_back(pieces[i]);
  }
  decomp.components.push_back(RealSubset::from_intervals(std::move(current)));
  return decomp;
}

ImageConnectednessReport image_connectedness_check(const SampledFunction& f,
                                                   double q, double r) {
  require_radius(q);
  require_radius(r);
  const RealSubset domain = RealSubset::from_points(f.domain().points());
  const RealSubset image = RealSubset::from_points(f.values());

  ImageConnectednessReport report;
  report.domain_q_connected = is_r_connected(domain, q);
  report.function_qr_continuous = is_qr_continuous(f, FuzzyParams(q, r));
  report.image_r_connected = is_r_connected(image, r);
  report.transfer_consistent =
      !(report.domain_q_connected && report.function_qr_continuous &&
        !report.image_r_connected);
  return report;
}

}  // namespace discont
