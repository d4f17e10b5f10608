#include "discont/solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace discont {

namespace {

struct EndpointIndices {
  std::size_t ia = 0;
  std::size_t ib = 0;
};

EndpointIndices locate_endpoints(const SampledFunction& f, double a, double b,
                                 bool as_precondition) {
  const auto ia = f.domain().index_of(a);
  const auto ib = f.domain().index_of(b);
  if (!ia || !ib) {
    std::ostringstream os;
    os << "endpoint " << (!ia ? a : b) << " is not a domain point";
    if (as_precondition) {
      throw PreconditionError("endpoint_not_in_domain", os.str());
    }
    throw Error(Errc::point_not_in_domain, os.str());
  }
  if (!(a < b)) {
    throw PreconditionError("endpoint_order", "endpoints must satisfy a < b");
  }
  return EndpointIndices{*ia, *ib};
}

struct BracketScan {
  double best_x = 0.0;
  double best_residual = 0.0;
  double max_jump = 0.0;
  bool found = false;
};

// Scans adjacent sample pairs in [ia, ib] for a sign change of f - target
// and keeps the bracketing endpoint with the smallest residual, breaking
// ties toward smaller x. Left-to-right order makes the result
// deterministic.
BracketScan bracket_scan(const std::vector<double>& xs,
                         const std::vector<double>& ys, std::size_t ia,
                         std::size_t ib, double target) {
  BracketScan scan;
  auto consider = [&scan](double x, double residual) {
    if (!scan.found || residual < scan.best_residual) {
      scan.found = true;
      scan.best_x = x;
      scan.best_residual = residual;
    }
  };
  for (std::size_t i = ia; i < ib; ++i) {
    const double si = ys[i] - target;
    const double sj = ys[i + 1] - target;
    scan.max_jump = std::max(scan.max_jump, std::abs(ys[i + 1] - ys[i]));
    const bool bracket = (si <= 0.0 && sj >= 0.0) || (si >= 0.0 && sj <= 0.0);
    if (bracket) {
      consider(xs[i], std::abs(si));
      consider(xs[i + 1], std::abs(sj));
    }
  }
  return scan;
}

void require_target_in_range(double fa, double fb, double target,
                             bool as_precondition) {
  const double lo = std::min(fa, fb);
  const double hi = std::max(fa, fb);
  if (target < lo || target > hi) {
    std::ostringstream os;
    os << "target " << target << " is outside [" << lo << ", " << hi << "]";
    if (as_precondition) {
      throw PreconditionError("target_out_of_range", os.str());
    }
    throw Error(Errc::target_out_of_range, os.str());
  }
}

double restricted_uib(const std::vector<double>& xs, std::size_t ia,
                      std::size_t ib) {
  double uib = 0.0;
  for (std::size_t i = ia; i < ib; ++i) {
    uib = std::max(uib, xs[i + 1] - xs[i]);
  }
  return uib;
}

bool integral(double v) {
  return std::isfinite(v) && v == std::floor(v) && std::abs(v) <= 9.007e15;
}

}  // namespace

const char* guarantee_label(GuaranteeKind g) noexcept {
  return g == GuaranteeKind::exact ? "exact" : "fuzzy";
}

CodomainGrid CodomainGrid::uniform(double spacing, bool must_contain_zero) {
  if (!(spacing > 0.0) || !std::isfinite(spacing)) {
    throw std::invalid_argument(
        "codomain spacing must be a finite positive real");
  }
  CodomainGrid g;
  g.spacing_ = spacing;
  g.must_contain_zero_ = must_contain_zero;
  return g;
}

CodomainGrid CodomainGrid::explicit_set(DiscreteSet points,
                                        bool must_contain_zero) {
  CodomainGrid g;
  g.points_ = std::move(points);
  g.must_contain_zero_ = must_contain_zero;
  return g;
}

bool CodomainGrid::contains(double y) const noexcept {
  if (points_) return points_->contains(y);
  const double k = std::round(y / spacing_);
  return k * spacing_ == y;
}

std::optional<double> CodomainGrid::lib() const {
  if (points_) return points_->stats().lib;
  return spacing_;
}

Witness fuzzy_intermediate(const SampledFunction& f, double a, double b,
                           double target) {
  const auto [ia, ib] = locate_endpoints(f, a, b, /*as_precondition=*/false);
  const auto& xs = f.domain().points();
  const auto& ys = f.values();
  require_target_in_range(ys[ia], ys[ib], target, /*as_precondition=*/false);

  const BracketScan scan = bracket_scan(xs, ys, ia, ib, target);
  if (!scan.found) {
    throw std::logic_error(
        "bracket scan found no sign change for an in-range target");
  }
  Witness w;
  w.location = scan.best_x;
  w.residual = scan.best_residual;
  w.guarantee = GuaranteeKind::fuzzy;
  w.fuzzy_bound = scan.max_jump / 2.0;
  w.interior = a < w.location && w.location < b;
  return w;
}

Witness discrete_intermediate(const SampledFunction& f,
                              const CodomainGrid& codomain, double a, double b,
                              double target, const FuzzyParams& params) {
  const auto [ia, ib] = locate_endpoints(f, a, b, /*as_precondition=*/true);
  const auto& xs = f.domain().points();
  const auto& ys = f.values();

  const double uib = restricted_uib(xs, ia, ib);
  if (params.q < uib) {
    std::ostringstream os;
    os << "q = " << params.q << " is below the largest adjacent distance "
       << uib << " of the domain restricted to [a, b]";
    throw PreconditionError("q_too_small", os.str());
  }
  if (const auto lib = codomain.lib(); lib && *lib < params.r) {
    std::ostringstream os;
    os << "codomain lib " << *lib << " is below r = " << params.r;
    throw PreconditionError("codomain_lib_below_r", os.str());
  }
  if (!is_qr_continuous(f, params)) {
    std::ostringstream os;
    os << "f is not (" << params.q << ", " << params.r
       << ")-continuous on its domain";
    throw PreconditionError("continuity", os.str());
  }
  for (std::size_t i = 0; i < ys.size(); ++i) {
    if (!codomain.contains(ys[i])) {
      std::ostringstream os;
      os << "sample value f(" << xs[i] << ") = " << ys[i]
         << " is not on the codomain grid";
      throw PreconditionError("value_off_grid", os.str());
    }
  }
  if (!codomain.contains(target)) {
    std::ostringstream os;
    os << "target " << target << " is not on the codomain grid";
    throw PreconditionError("target_off_grid", os.str());
  }
  require_target_in_range(ys[ia], ys[ib], target, /*as_precondition=*/true);
  if (codomain.must_contain_zero() && !codomain.contains(0.0)) {
    throw PreconditionError("codomain_missing_zero",
                            "the codomain grid must contain 0");
  }

  const BracketScan scan = bracket_scan(xs, ys, ia, ib, target);
  if (!scan.found || scan.best_residual != 0.0) {
    // The preconditions above force an exact hit; anything else is a bug.
    throw std::logic_error("exact witness missing despite preconditions");
  }
  Witness w;
  w.location = scan.best_x;
  w.residual = 0.0;
  w.guarantee = GuaranteeKind::exact;
  w.interior = a < w.location && w.location < b;
  return w;
}

Witness digital_intermediate(const SampledFunction& f, std::int64_t m,
                             std::int64_t n, std::int64_t target) {
  const auto& xs = f.domain().points();
  const auto& ys = f.values();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!integral(xs[i])) {
      throw PreconditionError("integer_domain",
                              "domain points must be integers");
    }
    if (i + 1 < xs.size() && xs[i + 1] - xs[i] != 1.0) {
      throw PreconditionError("consecutive_domain",
                              "domain must be consecutive integers");
    }
    if (!integral(ys[i])) {
      throw PreconditionError("integer_values", "values must be integers");
    }
  }
  if (!(m < n)) {
    throw PreconditionError("endpoint_order", "endpoints must satisfy m < n");
  }
  const auto im = f.domain().index_of(static_cast<double>(m));
  const auto in = f.domain().index_of(static_cast<double>(n));
  if (!im || !in) {
    throw PreconditionError("endpoint_not_in_domain",
                            "m and n must be domain points");
  }
  for (std::size_t i = 0; i + 1 < ys.size(); ++i) {
    if (std::abs(ys[i + 1] - ys[i]) > 1.0) {
      std::ostringstream os;
      os << "adjacent values jump by " << std::abs(ys[i + 1] - ys[i])
         << " > 1 at x = " << xs[i];
      throw Error(Errc::not_digitally_continuous, os.str());
    }
  }
  const double l = static_cast<double>(target);
  const double fm = ys[*im];
  const double fn = ys[*in];
  if (!((fm < l && l < fn) || (fm > l && l > fn))) {
    std::ostringstream os;
    os << "target " << target << " is not strictly between f(m) = " << fm
       << " and f(n) = " << fn;
    throw Error(Errc::target_out_of_open_range, os.str());
  }
  for (std::size_t i = *im + 1; i < *in; ++i) {
    if (ys[i] == l) {
      Witness w;
      w.location = xs[i];
      w.residual = 0.0;
      w.guarantee = GuaranteeKind::exact;
      w.interior = true;
      return w;
    }
  }
  // Unit steps cannot skip an integer strictly between the endpoints.
  throw std::logic_error("digital witness missing despite preconditions");
}

}  // namespace discont
