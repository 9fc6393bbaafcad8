#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "starsearch/analysis.hpp"

using namespace starsearch;

TEST_CASE("phi fixed points") {
  CHECK(phi(0.0) == 3.0);
  CHECK(phi(1.0) == doctest::Approx(9.0).epsilon(1e-14));
  CHECK(phi(2.0) == doctest::Approx(14.5).epsilon(1e-14));
  CHECK(phi(3.0) == doctest::Approx(539.0 / 27.0).epsilon(1e-14));
  CHECK(kExtremeBound == doctest::Approx(8.43656365691809).epsilon(1e-14));
  CHECK(kExtremeBound < phi(1.0));
  CHECK_THROWS_AS(phi(-0.5), std::invalid_argument);
}

TEST_CASE("phi routes agree and increase on a dense grid") {
  double prev = phi(0.0);
  for (int k = 1; k <= 4000; ++k) {
    const double x = k * (10000.0 / 4000.0);
    const double a = phi(x);
    const double b = phi_via_base(x);
    CHECK(std::abs(a - b) <= 1e-12 * std::abs(a));
    CHECK(a > prev);
    prev = a;
  }
  // small arguments too
  for (double x = 0.01; x < 2.0; x += 0.01) {
    CHECK(std::abs(phi(x) - phi_via_base(x)) <= 1e-12 * phi(x));
  }
}

TEST_CASE("growth bases") {
  CHECK(growth_base(1.0) == 2.0);
  CHECK(growth_base(0.5) == 3.0);
  CHECK(growth_base_mt(4, 2) == 1.5);
  for (int m = 2; m <= 10; ++m) CHECK(growth_base_mt(m, m - 1) == 2.0);
  CHECK_THROWS_AS(growth_base(0.0), std::invalid_argument);
  CHECK_THROWS_AS(growth_base(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(growth_base_mt(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(growth_base_mt(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(growth_base_mt(3, 0), std::invalid_argument);
}

TEST_CASE("ratio guarantee switches to the extreme bound at s = m") {
  CHECK(ratio_guarantee(5, 2) == phi(3.0));
  CHECK(ratio_guarantee(5, 5) == kExtremeBound);
  CHECK(ratio_guarantee(2, 1) == doctest::Approx(9.0));
  CHECK_THROWS_AS(ratio_guarantee(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(ratio_guarantee(3, 4), std::invalid_argument);
}

TEST_CASE("transition factor values") {
  for (int q = 1; q <= 100; ++q) {
    CHECK(std::abs(transition_factor(q, 1) - 1.0) <= 1e-12);
  }
  CHECK(transition_factor(1, 2) == doctest::Approx(26.0 / 27.0).epsilon(1e-14));
  CHECK(transition_factor(3, 4) <= 1.0 + 1e-12);
  CHECK_THROWS_AS(transition_factor(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(transition_factor(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(transition_factor(2, 4), std::invalid_argument);
}

TEST_CASE("gap verifier") {
  const PhiGapReport rep = verify_phi_gap(10000);
  CHECK(rep.pass);
  CHECK(rep.phi_monotone);
  CHECK(rep.half_gap_decreasing);
  CHECK(rep.min_slack > 0.0);
  // the half gap converges to e from above
  CHECK(std::abs(rep.tail_half_gap - std::numbers::e) < 1e-3);
  CHECK(rep.tail_half_gap > std::numbers::e);
  // the first gap is phi(1) - phi(0) = 6
  CHECK(phi(1.0) - phi(0.0) == doctest::Approx(6.0).epsilon(1e-14));
  CHECK(6.0 >= 2.0 * std::numbers::e);
}

TEST_CASE("gap verifier matches the serial reference") {
  const PhiGapReport a = verify_phi_gap(3000);
  const PhiGapReport b = verify_phi_gap_serial(3000);
  CHECK(a.pass == b.pass);
  CHECK(a.min_gap == b.min_gap);
  CHECK(a.min_gap_q == b.min_gap_q);
  CHECK(a.min_slack == b.min_slack);
  CHECK(a.tail_half_gap == b.tail_half_gap);
  CHECK(a.phi_monotone == b.phi_monotone);
  CHECK(a.half_gap_decreasing == b.half_gap_decreasing);
}

TEST_CASE("transition bound verifier") {
  const HBoundReport rep = verify_h_bound(500);
  CHECK(rep.pass);
  CHECK(rep.max_factor <= 1.0 + 1e-12);
  CHECK(rep.boundary_max_error <= 1e-12);
  CHECK(rep.interior_below_edges);
  CHECK(rep.evaluated == 500ll * 501ll / 2ll + 500ll);  // sum of (q+1)
}

TEST_CASE("transition bound verifier matches the serial reference") {
  const HBoundReport a = verify_h_bound(200);
  const HBoundReport b = verify_h_bound_serial(200);
  CHECK(a.pass == b.pass);
  CHECK(a.max_factor == b.max_factor);
  CHECK(a.argmax_q == b.argmax_q);
  CHECK(a.argmax_ell == b.argmax_ell);
  CHECK(a.boundary_max_error == b.boundary_max_error);
  CHECK(a.evaluated == b.evaluated);
}
