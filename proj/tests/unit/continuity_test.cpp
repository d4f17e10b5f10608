#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "discont/continuity.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using discont::DiscreteSet;
using discont::Error;
using discont::FuzzyParams;
using discont::SampledFunction;
using discont::defect_at;
using discont::defect_profile;
using discont::gap_certificate;
using discont::invert_monotone;
using discont::is_qr_continuous;
using discont::is_qr_continuous_at;
using discont::trivial_continuity_bound;
using discont::testing::Rng;

namespace {

// Nudge past a decimal window boundary; adjacent-distance comparisons
// against q are exact, so decimal q values need caller-side slack.
constexpr double kBoundaryEps = 1e-12;

}  // namespace

TEST_CASE("defect on the dense cubic fixture") {
  const auto f = discont::testing::cubic_fixture(1000);

  const double d_wide = defect_at(f, 1.0, 0.1 + kBoundaryEps);
  CHECK(std::abs(d_wide - 0.331) < 1e-9);
  CHECK(d_wide == discont::testing::brute_defect_at(f, 1.0, 0.1 + kBoundaryEps));

  const double d_narrow = defect_at(f, 1.0, 0.03 + kBoundaryEps);
  CHECK(std::abs(d_narrow - 0.092727) < 1e-9);
  CHECK(d_narrow ==
        discont::testing::brute_defect_at(f, 1.0, 0.03 + kBoundaryEps));

  CHECK(is_qr_continuous_at(f, 1.0, FuzzyParams(0.03 + kBoundaryEps, 0.1)));
  CHECK_FALSE(
      is_qr_continuous_at(f, 1.0, FuzzyParams(0.1 + kBoundaryEps, 0.1)));
}

TEST_CASE("defect_at basics") {
  const auto f =
      SampledFunction::from_pairs({{0, 2}, {1, 5}, {2, 4}}, 0.0);
  CHECK(defect_at(f, 1.0, 0.0) == 0.0);
  CHECK_THROWS_AS(defect_at(f, 0.5, 1.0), Error);

  const auto constant =
      SampledFunction::from_pairs({{0, 3}, {1, 3}, {5, 3}}, 0.0);
  CHECK(defect_at(constant, 1.0, 100.0) == 0.0);
}

TEST_CASE("defect_profile per-point values and global max") {
  const auto f = SampledFunction::from_samples(
      DiscreteSet::from_values({0, 1, 2}, 0.0), {0, 5, 6});
  const auto profile = defect_profile(f, 1.0);
  REQUIRE(profile.per_point.size() == 3);
  CHECK(profile.per_point[0].defect == 5.0);
  CHECK(profile.per_point[1].defect == 5.0);
  CHECK(profile.per_point[2].defect == 1.0);
  CHECK(profile.global == 5.0);
  CHECK(profile.attained_at == 0.0);
}

TEST_CASE("zero slack gives zero defects everywhere") {
  Rng rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    const auto f = discont::testing::random_lattice_function(rng);
    CHECK(defect_profile(f, 0.0).global == 0.0);
    CHECK(is_qr_continuous(f, FuzzyParams(0.0, 0.0)));
  }
}

TEST_CASE("profile matches defect_at at every point") {
  Rng rng(62);
  for (int trial = 0; trial < 60; ++trial) {
    const auto f = discont::testing::random_lattice_function(rng);
    const double q = discont::testing::dyadic(rng, 5, 0.0, 1.5);
    const auto profile = defect_profile(f, q);
    double global = 0.0;
    for (const auto& pd : profile.per_point) {
      const double direct = defect_at(f, pd.point, q);
      CHECK(pd.defect == direct);
      CHECK(direct == discont::testing::brute_defect_at(f, pd.point, q));
      global = std::max(global, direct);
    }
    CHECK(profile.global == global);
  }
}

TEST_CASE("defect grows with q and verdicts are order-monotone") {
  Rng rng(63);
  for (int trial = 0; trial < 60; ++trial) {
    const auto f = discont::testing::random_lattice_function(rng);
    const double q1 = discont::testing::dyadic(rng, 5, 0.0, 1.0);
    const double q2 = q1 + discont::testing::dyadic(rng, 5, 0.0, 1.0);
    for (double a : f.domain().points()) {
      CHECK(defect_at(f, a, q1) <= defect_at(f, a, q2));
    }
    const double r = discont::testing::dyadic(rng, 5, 0.0, 2.0);
    if (is_qr_continuous(f, FuzzyParams(q2, r))) {
      CHECK(is_qr_continuous(f, FuzzyParams(q1, r)));
      CHECK(is_qr_continuous(f, FuzzyParams(q2, r + 0.5)));
    }
  }
}

TEST_CASE("below the trivial bound every function is (q, r)-continuous") {
  const auto grid = DiscreteSet::uniform_grid(1.0, -1, 5);
  CHECK(trivial_continuity_bound(grid) == 1.0);
  const auto f = SampledFunction::from_samples(grid, {100, -3, 7, 0, 42});
  CHECK(is_qr_continuous(f, FuzzyParams(0.5, 0.0)));

  CHECK(trivial_continuity_bound(DiscreteSet::from_values({0, 0.5, 2}, 0.0)) ==
        0.5);
  CHECK_FALSE(
      trivial_continuity_bound(DiscreteSet::from_values({9}, 0.0)).has_value());

  Rng rng(64);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = discont::testing::random_lattice_function(rng);
    const auto bound = trivial_continuity_bound(g.domain());
    if (!bound) continue;
    const double q = discont::testing::dyadic(rng, 6, 0.0, *bound) -
                     std::ldexp(1.0, -6);
    if (q < 0.0) continue;
    REQUIRE(q < *bound);
    CHECK(defect_profile(g, q).global == 0.0);
  }
}

TEST_CASE("epsilon-delta oracle agrees with the closed-form verdict") {
  Rng rng(65);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = discont::testing::random_lattice_function(rng);
    const double q = discont::testing::dyadic(rng, 5, 0.0, 1.5);
    const double r = discont::testing::dyadic(rng, 5, 0.0, 1.5);
    for (double a : f.domain().points()) {
      CHECK(is_qr_continuous_at(f, a, FuzzyParams(q, r)) ==
            discont::testing::epsilon_delta_continuous_at(f, a, q, r));
    }
  }
}

TEST_CASE("gap certificates for monotone samples") {
  const auto f =
      SampledFunction::from_pairs({{0, 0}, {1, 0.4}, {2, 0.9}}, 0.0);
  const auto cert = gap_certificate(f);
  CHECK(cert.domain_gap_sup == 1.0);
  CHECK(cert.image_gap_sup == 0.5);

  // Dense identity samples: the certificate threshold shrinks with the step.
  std::vector<std::pair<double, double>> pairs;
  for (int i = 0; i <= 64; ++i) {
    const double x = std::ldexp(static_cast<double>(i), -6);
    pairs.emplace_back(x, x);
  }
  const auto dense = SampledFunction::from_pairs(std::move(pairs), 0.0);
  CHECK(gap_certificate(dense).image_gap_sup == std::ldexp(1.0, -6));

  CHECK_THROWS_AS(
      gap_certificate(SampledFunction::from_pairs({{0, 1}, {1, 1}}, 0.0)),
      Error);
}

TEST_CASE("inverting a monotone sample swaps the certificate sups") {
  Rng rng(66);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n =
        static_cast<std::size_t>(discont::testing::rand_int(rng, 2, 12));
    const auto xs = discont::testing::dyadic_walk(rng, n, 0.0, 3, 0.125, 2.0);
    auto ys = discont::testing::dyadic_walk(
        rng, n, discont::testing::dyadic(rng, 3, -4.0, 4.0), 3, 0.125, 2.0);
    if (discont::testing::rand_int(rng, 0, 1) == 1) {
      std::reverse(ys.begin(), ys.end());
    }
    const auto f = SampledFunction::from_samples(
        DiscreteSet::from_values(xs, 0.0), ys);
    const auto cf = gap_certificate(f);
    const auto cg = gap_certificate(invert_monotone(f));
    CHECK(cg.domain_gap_sup == cf.image_gap_sup);
    CHECK(cg.image_gap_sup == cf.domain_gap_sup);
  }
}

TEST_CASE("slack parameters must be nonnegative") {
  CHECK_THROWS_AS(FuzzyParams(-0.1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(FuzzyParams(0.0, -1.0), std::invalid_argument);
  const auto f = SampledFunction::from_pairs({{0, 0}}, 0.0);
  CHECK_THROWS_AS(defect_at(f, 0.0, -1.0), std::invalid_argument);
}
