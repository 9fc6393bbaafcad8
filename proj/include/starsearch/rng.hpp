#pragma once

#include <cstdint>
#include <vector>

#include "starsearch/types.hpp"

namespace starsearch {

// SplitMix64 (Vigna). Chosen as the single project-wide generator: trivially
// portable, so seeded instance streams reproduce bit-for-bit anywhere.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with the standard 53-bit mantissa construction.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

struct WeightRule {
  enum class Kind { FractionOfTotal, Fixed };
  Kind kind = Kind::FractionOfTotal;
  double value = 1.0;

  static WeightRule fraction(double p) { return {Kind::FractionOfTotal, p}; }
  static WeightRule fixed(double w) { return {Kind::Fixed, w}; }
};

// Reproducible weighted instances: all rays carry targets with distances in
// [dist_min, dist_max] (dist_min >= 1) and weights in [w_min, w_max]. The
// goal is either a fraction of the total weight or a fixed value; a fixed
// goal re-samples infeasible draws up to a cap and then throws.
std::vector<Instance> random_instances(std::uint64_t seed, int ray_count, int count,
                                       double dist_min, double dist_max,
                                       double w_min, double w_max, WeightRule rule);

// Reproducible subset-search instances with ray counts in [m_min, m_max].
// A share of instances (force_full_fraction) has every ray populated and
// S = all rays, the extreme regime; in the rest each ray is present with
// probability 0.85 and S is a random nonempty subset of present rays.
std::vector<SubsetInstance> random_subset_instances(std::uint64_t seed, int count,
                                                    int m_min, int m_max,
                                                    double dist_min, double dist_max,
                                                    double force_full_fraction = 0.2);

}  // namespace starsearch
