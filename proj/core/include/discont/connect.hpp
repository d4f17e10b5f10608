#pragma once

#include <vector>

#include "discont/errors.hpp"
#include "discont/sampled_function.hpp"

namespace discont {

/// Closed interval [lo, hi]; lo == hi is an isolated point.
struct ClosedInterval {
  double lo = 0.0;
  double hi = 0.0;

  bool operator==(const ClosedInterval&) const = default;
};

/// Finite union of closed intervals and isolated points of the real
/// line. Pieces are kept sorted, pairwise disjoint and non-touching;
/// overlapping or touching inputs merge at construction. May be empty.
class RealSubset {
 public:
  RealSubset() = default;

  static RealSubset from_intervals(std::vector<ClosedInterval> pieces);
  static RealSubset from_points(const std::vector<double>& points);

  const std::vector<ClosedInterval>& pieces() const noexcept {
    return pieces_;
  }
  bool empty() const noexcept { return pieces_.empty(); }

  bool operator==(const RealSubset& other) const noexcept {
    return pieces_ == other.pieces_;
  }

 private:
  explicit RealSubset(std::vector<ClosedInterval> pieces)
      : pieces_(std::move(pieces)) {}

  std::vector<ClosedInterval> pieces_;
};

/// min over pieces of the point-to-interval distance; 0 iff c is in the
/// set (pieces are closed, so the infimum is attained).
double dist_to_set(double c, const RealSubset& a);

/// A set is r-disconnected when it splits into two nonempty parts whose
/// every cross distance exceeds r; on the line this happens exactly when
/// some gap between consecutive pieces exceeds r. r = 0 is classical
/// connectedness of the union.
bool is_r_connected(const RealSubset& c, double r);

/// Maximal r-connected components, obtained by cutting exactly at the
/// inter-piece gaps larger than r. Components partition the pieces; the
/// union of any two distinct components is r-disconnected.
struct ComponentDecomposition {
  std::vector<RealSubset> components;
  double r = 0.0;
};

ComponentDecomposition r_components(const RealSubset& c, double r);

/// Connectedness-transfer check on the sample points of f: a q-connected
/// domain mapped by a (q, r)-continuous function must have an
/// r-connected image. transfer_consistent is false only on an internal
/// error, never as a data property.
struct ImageConnectednessReport {
  bool domain_q_connected = false;
  bool function_qr_continuous = false;
  bool image_r_connected = false;
  bool transfer_consistent = true;
};

ImageConnectednessReport image_connectedness_check(const SampledFunction& f,
                                                   double q, double r);

}  // namespace discont
