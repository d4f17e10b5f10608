#include "discont/sampled_function.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace discont {

const char* monotone_label(MonotoneClass m) noexcept {
  switch (m) {
    case MonotoneClass::strictly_increasing: return "strictly_increasing";
    case MonotoneClass::strictly_decreasing: return "strictly_decreasing";
    case MonotoneClass::neither: return "neither";
  }
  return "neither";
}

SampledFunction SampledFunction::from_pairs(
    std::vector<std::pair<double, double>> pairs, double tol) {
  if (pairs.empty()) {
    throw Error(Errc::empty_input, "a sampled function needs at least one sample");
  }
  if (!(tol >= 0.0) || !std::isfinite(tol)) {
    throw std::invalid_argument("tol must be a finite nonnegative real");
  }
  for (const auto& [x, y] : pairs) {
    if (!std::isfinite(x) || !std::isfinite(y)) {
      throw Error(Errc::nonfinite_value, "samples must be finite");
    }
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i + 1 < pairs.size(); ++i) {
    if (pairs[i + 1].first - pairs[i].first <= tol) {
      std::ostringstream os;
      os << "duplicate abscissa: x = " << pairs[i].first << " and x = "
         << pairs[i + 1].first << " are within tol " << tol;
      throw Error(Errc::duplicate_abscissa, os.str());
    }
  }
  std::vector<double> xs(pairs.size());
  std::vector<double> ys(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    xs[i] = pairs[i].first;
    ys[i] = pairs[i].second;
  }
  return from_samples(DiscreteSet::from_values(std::move(xs), 0.0),
                      std::move(ys));
}

SampledFunction SampledFunction::from_samples(DiscreteSet domain,
                                              std::vector<double> values) {
  if (values.size() != domain.size()) {
    throw std::invalid_argument("value list must match domain size");
  }
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw Error(Errc::nonfinite_value, "sample values must be finite");
    }
  }
  return SampledFunction(std::move(domain), std::move(values));
}

double SampledFunction::value_at(double x) const {
  auto idx = domain_.index_of(x);
  if (!idx) {
    std::ostringstream os;
    os << "point " << x << " is not in the sample domain";
    throw Error(Errc::point_not_in_domain, os.str());
  }
  return values_[*idx];
}

MonotoneClass monotone_class(const SampledFunction& f) {
  const auto& ys = f.values();
  bool up = true;
  bool down = true;
  for (std::size_t i = 0; i + 1 < ys.size(); ++i) {
    if (!(ys[i] < ys[i + 1])) up = false;
    if (!(ys[i] > ys[i + 1])) down = false;
  }
  if (up) return MonotoneClass::strictly_increasing;
  if (down) return MonotoneClass::strictly_decreasing;
  return MonotoneClass::neither;
}

SampledFunction invert_monotone(const SampledFunction& f) {
  const MonotoneClass cls = monotone_class(f);
  if (cls == MonotoneClass::neither) {
    throw Error(Errc::not_strictly_monotone,
                "inverse requires a strictly monotone sample");
  }
  const auto& xs = f.domain().points();
  const auto& ys = f.values();
  const std::size_t n = ys.size();
  std::vector<double> image(n);
  std::vector<double> preimage(n);
  for (std::size_t i = 0; i < n; ++i) {
    // Image sorted ascending: reverse the order for decreasing samples.
    const std::size_t j =
        cls == MonotoneClass::strictly_decreasing ? n - 1 - i : i;
    image[i] = ys[j];
    preimage[i] = xs[j];
  }
  return SampledFunction::from_samples(
      DiscreteSet::from_values(std::move(image), 0.0), std::move(preimage));
}

double StepExtension::eval(double x) const noexcept {
  const auto& xs = base_.domain().points();
  const auto& ys = base_.values();
  if (x < xs.front()) return ys.front();
  auto it = std::upper_bound(xs.begin(), xs.end(), x);
  return ys[static_cast<std::size_t>(it - xs.begin()) - 1];
}

}  // namespace discont
