#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "discont/errors.hpp"

namespace discont {

/// Origin record for sets built as {k*spacing : m < k < n}.
struct UniformGridSpec {
  double spacing = 0.0;
  std::int64_t m = 0;
  std::int64_t n = 0;
};

/// Open interval (lo, hi) between two adjacent set points.
struct OpenInterval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const noexcept { return hi - lo; }
  bool operator==(const OpenInterval&) const = default;
};

/// Adjacent-distance statistics of a set.
///
/// lib/uib are the min/max distance between adjacent points; both are
/// empty for singletons. uniform holds exactly when lib == uib (exact
/// floating-point comparison); a singleton is uniform vacuously. spacing
/// is defined iff uniform and the set has at least two points.
struct SetStats {
  std::optional<double> lib;
  std::optional<double> uib;
  bool uniform = false;
  std::optional<double> spacing;
};

/// Every point of a set is adjacent to a gap (or an unbounded ray) on
/// both sides; interior gaps are ordered left to right and there are
/// exactly size()-1 of them.
struct GapReport {
  std::vector<OpenInterval> interior;
  double left_ray_end = 0.0;     // the ray (-inf, left_ray_end)
  double right_ray_start = 0.0;  // the ray (right_ray_start, +inf)
};

/// Finite, strictly increasing set of real numbers.
///
/// Every finite real set is trivially discrete (no accumulation points),
/// so the informative structure is in the adjacent distances: lib/uib,
/// uniformity, and the gap layout. Immutable after construction; all
/// operations are pure and values may be freely shared across threads.
class DiscreteSet {
 public:
  /// Sorts and validates. Two values that differ by <= tol are rejected
  /// as duplicates (tol = 0 rejects exact duplicates only).
  static DiscreteSet from_values(std::vector<double> values, double tol = 0.0);

  /// The finite uniform grid {k*spacing : m < k < n}. Requires
  /// spacing > 0 and n - m >= 2 so the open index window is nonempty.
  static DiscreteSet uniform_grid(double spacing, std::int64_t m,
                                  std::int64_t n);

  const std::vector<double>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  double min() const noexcept { return points_.front(); }
  double max() const noexcept { return points_.back(); }

  /// Exact membership test (no tolerance).
  bool contains(double x) const noexcept;
  std::optional<std::size_t> index_of(double x) const noexcept;

  const std::optional<UniformGridSpec>& grid_spec() const noexcept {
    return grid_;
  }

  SetStats stats() const;
  GapReport gaps() const;

  bool operator==(const DiscreteSet& other) const noexcept {
    return points_ == other.points_;
  }

 private:
  DiscreteSet(std::vector<double> points, std::optional<UniformGridSpec> grid)
      : points_(std::move(points)), grid_(std::move(grid)) {}

  std::vector<double> points_;
  std::optional<UniformGridSpec> grid_;
};

/// Merged set. Points of b within tol of some point of a collapse onto
/// a's value; the spacing of surviving points from the same input set is
/// preserved as-is.
DiscreteSet set_union(const DiscreteSet& a, const DiscreteSet& b,
                      double tol = 0.0);

/// Intersection and difference under tol-matching; empty results are
/// reported explicitly as disengaged optionals. Matched points keep a's
/// representative value.
struct SetAlgebraResult {
  std::optional<DiscreteSet> intersection;
  std::optional<DiscreteSet> difference;  // a \ b
};

SetAlgebraResult intersect_and_difference(const DiscreteSet& a,
                                          const DiscreteSet& b,
                                          double tol = 0.0);

}  // namespace discont
