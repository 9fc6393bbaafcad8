#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "starsearch/analysis.hpp"
#include "starsearch/offline.hpp"
#include "starsearch/rng.hpp"

using namespace starsearch;

namespace {

Instance three_ray_example() {
  // targets (1,1), (2,1), (10,5), goal 2: opt = 4 via {0,1}
  Instance inst(3, 2.0);
  inst.set_target(0, 1.0, 1.0);
  inst.set_target(1, 2.0, 1.0);
  inst.set_target(2, 10.0, 5.0);
  return inst;
}

}  // namespace

TEST_CASE("subset cost closed form") {
  Instance inst(3, 0.0);
  inst.set_target(0, 3.0, 1.0);
  inst.set_target(1, 5.0, 1.0);
  CHECK(subset_cost(inst, std::vector<int>{0, 1}) == doctest::Approx(11.0));
  CHECK(subset_cost(inst, std::vector<int>{1}) == doctest::Approx(5.0));
  CHECK(subset_cost(inst, 0u) == 0.0);
  CHECK_THROWS_AS(subset_cost(inst, std::vector<int>{2}), std::invalid_argument);

  Instance units(2, 0.0);
  units.set_target(0, 1.0, 1.0);
  units.set_target(1, 1.0, 1.0);
  CHECK(subset_cost(units, std::vector<int>{0, 1}) == doctest::Approx(3.0));

  Instance lone(1, 0.0);
  lone.set_target(0, 7.0, 1.0);
  CHECK(subset_cost(lone, std::vector<int>{0}) == doctest::Approx(7.0));
}

TEST_CASE("optimal cost and s on the worked example") {
  const OfflineSummary summary = analyze_instance(three_ray_example());
  CHECK(summary.opt == doctest::Approx(4.0));
  CHECK(summary.s == 2);
  REQUIRE(summary.optimal_subsets.size() == 1);
  CHECK(summary.optimal_subsets[0] == 0b011u);
  CHECK(summary.xi == doctest::Approx(9.0));
}

TEST_CASE("single target and zero goal conventions") {
  Instance single(4, 2.5);
  single.set_target(2, 6.0, 2.5);
  CHECK(optimal_cost(single) == doctest::Approx(6.0));
  CHECK(s_value(single) == 1);
  CHECK(refined_bound(single) == doctest::Approx(phi(3.0)));

  Instance zero(3, 0.0);
  zero.set_target(0, 2.0, 1.0);
  CHECK(optimal_cost(zero) == 0.0);
  CHECK(analyze_instance(zero).s == 0);
  CHECK_THROWS_AS(refined_bound(zero), degenerate_error);
}

TEST_CASE("all unit targets required when the goal is the full weight") {
  Instance inst(4, 4.0);
  for (int ray = 0; ray < 4; ++ray) inst.set_target(ray, 1.0 + 0.1 * ray, 1.0);
  const OfflineSummary summary = analyze_instance(inst);
  CHECK(summary.s == 4);
  CHECK(summary.opt == doctest::Approx(2.0 * (1.0 + 1.1 + 1.2 + 1.3) - 1.3));
}

TEST_CASE("the cheap-crowd refinement beats the cardinality bound") {
  // two heavy targets at D, m-2 light ones just past D/(m-2); xi stays O(1)
  // while phi(m - s_I) grows with m. Weights are binary fractions so the
  // feasibility sums are exact.
  const int m = 8;
  const double D = 50.0;
  const double eps = 1e-3;
  const double near = D / (m - 2) + eps;
  Instance inst(m, 1.5);
  inst.set_target(0, D, 0.75);
  inst.set_target(1, D, 0.75);
  for (int ray = 2; ray < m; ++ray) inst.set_target(ray, near, 0.125);

  const OfflineSummary summary = analyze_instance(inst);
  CHECK(summary.opt == doctest::Approx(3.0 * D));
  CHECK(summary.s == 2);
  const double full_cost = 2.0 * (2.0 * D + (m - 2) * near) - D;
  CHECK(summary.xi == doctest::Approx(phi(0.0) * full_cost / (3.0 * D)));
  CHECK(summary.xi < 5.1);
  CHECK(phi(static_cast<double>(m - summary.s)) > 30.0);
  // the guarantee variant maps the full set to 3+2e instead of 3
  CHECK(summary.xi_guarantee == doctest::Approx(9.0 * (3.0 * D + 2.0 * 6.0 * eps) / (3.0 * D)));
}

TEST_CASE("xi equals phi(m-1) when only a singleton is feasible") {
  Instance inst(5, 3.0);
  inst.set_target(0, 4.0, 3.0);
  inst.set_target(1, 1.0, 0.5);
  CHECK(refined_bound(inst) == doctest::Approx(phi(4.0)));
}

TEST_CASE("enumeration guard and infeasibility") {
  Instance big(25, 1.0);
  big.set_target(0, 1.0, 1.0);
  CHECK_THROWS_AS(analyze_instance(big), capacity_error);

  Instance infeasible(2, 5.0);
  infeasible.set_target(0, 1.0, 1.0);
  CHECK_THROWS_AS(analyze_instance(infeasible), feasibility_error);
}

TEST_CASE("parallel enumeration equals the serial reference bit for bit") {
  SplitMix64 rng(99);
  for (int m = 2; m <= 10; ++m) {
    const auto batch = random_instances(rng.next(), m, 25, 1.0, 50.0, 0.1, 4.0,
                                        WeightRule::fraction(0.55));
    for (const auto& inst : batch) {
      const OfflineSummary a = analyze_instance(inst);
      const OfflineSummary b = analyze_instance_serial(inst);
      CHECK(a.opt == b.opt);
      CHECK(a.s == b.s);
      CHECK(a.xi == b.xi);
      CHECK(a.xi_guarantee == b.xi_guarantee);
      CHECK(a.optimal_subsets == b.optimal_subsets);
    }
  }
}

TEST_CASE("structural properties of opt and xi") {
  const auto batch =
      random_instances(5150, 6, 150, 1.0, 80.0, 0.05, 5.0, WeightRule::fraction(0.5));
  for (const auto& inst : batch) {
    const OfflineSummary summary = analyze_instance(inst);

    // opt is a lower bound on every feasible subset cost, tight on optima
    const std::uint32_t full = (1u << 6) - 1u;
    CHECK(summary.opt <= subset_cost(inst, full) + 1e-12);
    for (std::uint32_t mask : summary.optimal_subsets) {
      CHECK(subset_cost(inst, mask) == doctest::Approx(summary.opt).epsilon(1e-12));
    }

    // xi never exceeds phi(m - s_I): the optimal subset has stretch 1
    CHECK(summary.xi <= ratio_guarantee(6, summary.s) * (1.0 + 1e-12));

    // growing a distance cannot shrink opt
    Instance worse = inst;
    for (int ray = 0; ray < worse.ray_count(); ++ray) {
      if (worse.has_target(ray)) {
        const Target t = *worse.target(ray);
        worse.set_target(ray, t.distance * 1.7 + 1.0, t.weight);
      }
    }
    CHECK(optimal_cost(worse) >= summary.opt - 1e-12);

    // shrinking the goal cannot raise opt
    Instance easier(inst.ray_count(), inst.goal() * 0.5);
    for (int ray = 0; ray < inst.ray_count(); ++ray) {
      if (inst.has_target(ray)) {
        const Target t = *inst.target(ray);
        easier.set_target(ray, t.distance, t.weight);
      }
    }
    CHECK(optimal_cost(easier) <= summary.opt + 1e-12);

    // d_S scales linearly with distances
    const double scaled_cost = subset_cost(worse, summary.optimal_subsets[0]);
    CHECK(scaled_cost >= summary.opt);
  }
}

TEST_CASE("subset cost of a goal set") {
  SubsetInstance inst(3);
  inst.set_distance(0, 2.0);
  inst.set_distance(2, 5.0);
  inst.set_subset({0, 2});
  CHECK(subset_cost(inst) == doctest::Approx(2.0 * 7.0 - 5.0));
}
