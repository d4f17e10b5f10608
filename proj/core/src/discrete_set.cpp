#include "discont/discrete_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace discont {

namespace {

void require_finite(const std::vector<double>& values) {
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw Error(Errc::nonfinite_value, "set points must be finite");
    }
  }
}

void require_valid_tol(double tol) {
  if (!(tol >= 0.0) || !std::isfinite(tol)) {
    throw std::invalid_argument("tol must be a finite nonnegative real");
  }
}

std::string describe_pair(double a, double b, double tol) {
  std::ostringstream os;
  os << "values " << a << " and " << b << " differ by " << std::abs(b - a)
     << " <= tol " << tol;
  return os.str();
}

// Distance from x to the nearest point of a sorted vector.
double nearest_distance(const std::vector<double>& pts, double x) {
  auto it = std::lower_bound(pts.begin(), pts.end(), x);
  double best = std::numeric_limits<double>::infinity();
  if (it != pts.end()) best = std::min(best, *it - x);
  if (it != pts.begin()) best = std::min(best, x - *(it - 1));
  return best;
}

std::optional<DiscreteSet> make_optional_set(std::vector<double> pts) {
  if (pts.empty()) return std::nullopt;
  return DiscreteSet::from_values(std::move(pts), 0.0);
}

}  // namespace

DiscreteSet DiscreteSet::from_values(std::vector<double> values, double tol) {
  require_valid_tol(tol);
  if (values.empty()) {
    throw Error(Errc::empty_input, "a discrete set needs at least one point");
  }
  require_finite(values);
  std::sort(values.begin(), values.end());
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    if (values[i + 1] - values[i] <= tol) {
      throw Error(Errc::duplicate_point,
                  "duplicate point: " +
                      describe_pair(values[i], values[i + 1], tol));
    }
  }
  return DiscreteSet(std::move(values), std::nullopt);
}

DiscreteSet DiscreteSet::uniform_grid(double spacing, std::int64_t m,
                                      std::int64_t n) {
  if (!(spacing > 0.0) || !std::isfinite(spacing)) {
    throw std::invalid_argument("grid spacing must be a finite positive real");
  }
  // n - m fits in uint64 even when the int64 subtraction would overflow.
  const std::uint64_t span =
      m < n ? static_cast<std::uint64_t>(n) - static_cast<std::uint64_t>(m)
            : 0;
  if (span < 2) {
    throw Error(Errc::empty_window,
                "index window (m, n) contains no integer: need n - m >= 2");
  }
  const std::uint64_t count = span - 1;
  if (count > 100'000'000ull) {
    throw std::length_error("uniform grid would exceed 1e8 points");
  }
  std::vector<double> pts;
  pts.reserve(static_cast<std::size_t>(count));
  for (std::int64_t k = m + 1; k < n; ++k) {
    pts.push_back(static_cast<double>(k) * spacing);
  }
  require_finite(pts);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (!(pts[i] < pts[i + 1])) {
      throw Error(Errc::duplicate_point,
                  "grid points collapse under rounding at index " +
                      std::to_string(i));
    }
  }
  return DiscreteSet(std::move(pts), UniformGridSpec{spacing, m, n});
}

bool DiscreteSet::contains(double x) const noexcept {
  return index_of(x).has_value();
}

std::optional<std::size_t> DiscreteSet::index_of(double x) const noexcept {
  auto it = std::lower_bound(points_.begin(), points_.end(), x);
  if (it != points_.end() && *it == x) {
    return static_cast<std::size_t>(it - points_.begin());
  }
  return std::nullopt;
}

SetStats DiscreteSet::stats() const {
  SetStats s;
  if (points_.size() < 2) {
    s.uniform = true;  // vacuous: no pair of adjacent points
    return s;
  }
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
    const double d = points_[i + 1] - points_[i];
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  s.lib = lo;
  s.uib = hi;
  s.uniform = (lo == hi);
  if (s.uniform) s.spacing = lo;
  return s;
}

GapReport DiscreteSet::gaps() const {
  GapReport g;
  g.interior.reserve(points_.size() - 1);
  for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
    g.interior.push_back(OpenInterval{points_[i], points_[i + 1]});
  }
  g.left_ray_end = points_.front();
  g.right_ray_start = points_.back();
  return g;
}

DiscreteSet set_union(const DiscreteSet& a, const DiscreteSet& b, double tol) {
  require_valid_tol(tol);
  std::vector<double> merged = a.points();
  merged.reserve(a.size() + b.size());
  bool added = false;
  for (double y : b.points()) {
    if (nearest_distance(a.points(), y) > tol) {
      merged.push_back(y);
      added = true;
    }
  }
  if (!added) return a;  // preserves a's origin, covers X u X == X
  std::sort(merged.begin(), merged.end());
  return DiscreteSet::from_values(std::move(merged), 0.0);
}

SetAlgebraResult intersect_and_difference(const DiscreteSet& a,
                                          const DiscreteSet& b, double tol) {
  require_valid_tol(tol);
  std::vector<double> inter;
  std::vector<double> diff;
  for (double x : a.points()) {
    if (nearest_distance(b.points(), x) <= tol) {
      inter.push_back(x);
    } else {
      diff.push_back(x);
    }
  }
  return SetAlgebraResult{make_optional_set(std::move(inter)),
                          make_optional_set(std::move(diff))};
}

}  // namespace discont
