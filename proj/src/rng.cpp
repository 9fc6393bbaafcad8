#include "starsearch/rng.hpp"

#include <string>

namespace starsearch {

std::vector<Instance> random_instances(std::uint64_t seed, int ray_count, int count,
                                       double dist_min, double dist_max, double w_min,
                                       double w_max, WeightRule rule) {
  if (ray_count < 1) throw std::invalid_argument("ray count must be positive");
  if (count < 0) throw std::invalid_argument("count must be nonnegative");
  if (!(dist_min >= 1.0) || !(dist_max >= dist_min)) {
    throw std::invalid_argument("distance range must satisfy 1 <= min <= max");
  }
  if (!(w_min >= 0.0) || !(w_max >= w_min)) {
    throw std::invalid_argument("weight range must satisfy 0 <= min <= max");
  }

  constexpr int kResampleCap = 100;
  SplitMix64 rng(seed);
  std::vector<Instance> out;
  out.reserve(static_cast<std::size_t>(count));

  for (int k = 0; k < count; ++k) {
    int attempts = 0;
    for (;;) {
      Instance inst(ray_count, 0.0);
      double total = 0.0;
      for (int ray = 0; ray < ray_count; ++ray) {
        const double d = rng.uniform(dist_min, dist_max);
        const double w = rng.uniform(w_min, w_max);
        inst.set_target(ray, d, w);
        total += w;
      }
      const double goal = rule.kind == WeightRule::Kind::FractionOfTotal
                              ? rule.value * total
                              : rule.value;
      Instance with_goal(ray_count, goal);
      for (int ray = 0; ray < ray_count; ++ray) {
        const Target& t = *inst.target(ray);
        with_goal.set_target(ray, t.distance, t.weight);
      }
      if (with_goal.feasible()) {
        out.push_back(std::move(with_goal));
        break;
      }
      if (++attempts > kResampleCap) {
        throw feasibility_error("fixed weight goal " + std::to_string(rule.value) +
                                " stayed infeasible after " +
                                std::to_string(kResampleCap) + " resamples");
      }
    }
  }
  return out;
}

std::vector<SubsetInstance> random_subset_instances(std::uint64_t seed, int count,
                                                    int m_min, int m_max,
                                                    double dist_min, double dist_max,
                                                    double force_full_fraction) {
  if (m_min < 2 || m_max < m_min) {
    throw std::invalid_argument("ray-count range must satisfy 2 <= min <= max");
  }
  if (!(dist_min >= 1.0) || !(dist_max >= dist_min)) {
    throw std::invalid_argument("distance range must satisfy 1 <= min <= max");
  }

  SplitMix64 rng(seed);
  std::vector<SubsetInstance> out;
  out.reserve(static_cast<std::size_t>(count));

  for (int k = 0; k < count; ++k) {
    const int m = m_min + static_cast<int>(rng.below(
                              static_cast<std::uint64_t>(m_max - m_min + 1)));
    SubsetInstance inst(m);
    if (rng.next_double() < force_full_fraction) {
      std::vector<int> all(static_cast<std::size_t>(m));
      for (int ray = 0; ray < m; ++ray) {
        inst.set_distance(ray, rng.uniform(dist_min, dist_max));
        all[static_cast<std::size_t>(ray)] = ray;
      }
      inst.set_subset(std::move(all));
    } else {
      std::vector<int> present;
      while (present.empty()) {
        present.clear();
        for (int ray = 0; ray < m; ++ray) {
          if (rng.next_double() < 0.85) present.push_back(ray);
        }
      }
      for (int ray : present) inst.set_distance(ray, rng.uniform(dist_min, dist_max));
      std::vector<int> subset;
      for (int ray : present) {
        if (rng.next_double() < 0.5) subset.push_back(ray);
      }
      if (subset.empty()) {
        subset.push_back(present[rng.below(present.size())]);
      }
      inst.set_subset(std::move(subset));
    }
    out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace starsearch
