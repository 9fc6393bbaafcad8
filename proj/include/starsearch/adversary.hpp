#pragma once

#include <vector>

#include "starsearch/strategies.hpp"
#include "starsearch/types.hpp"

namespace starsearch {

inline constexpr double kDefaultEpsilon = 1e-6;

// A probe the strategy would issue against a star with no reachable targets.
struct ScheduledProbe {
  int ray = 0;
  double depth = 0.0;
};

// First `count` probes of a strategy run that never finds anything. Throws
// generation_error if the strategy proposes an unbounded sweep (it would
// never return to the origin).
std::vector<ScheduledProbe> probe_schedule(const StrategySpec& spec, int ray_count,
                                           int count);

// Single hidden unit-weight target placed just beyond the depth of the
// adaptive strategy's step-th probe. Sweeping step drives the measured
// ratio toward phi(m-1) from below.
Instance gen_single_target(int ray_count, int step, double epsilon = kDefaultEpsilon);

// s-1 cheap unit-weight targets at the minimum legal distance, one far
// unit-weight target placed adversarially against the adaptive strategy's
// post-cheap schedule, zero-weight targets out of the run's reach elsewhere,
// goal s. Family supremum approaches phi(m-s).
Instance gen_subsets_lb(int ray_count, int s, int step, double epsilon = kDefaultEpsilon);

// All rays carry equal unit weights and the goal forces ceil(t_real) finds;
// distances follow the gen_subsets_lb placement with s = ceil(t_real).
// Requires 0 < t_real < m with ceil(t_real) < m (ceil = m is the all-targets
// regime of gen_all_targets).
Instance gen_weights_lb(int ray_count, double t_real, int step,
                        double epsilon = kDefaultEpsilon);

// Snapshot construction: run the strategy for `snapshot` excursions against
// an empty star, record the explored depth of every ray, and hide a
// unit-weight target just beyond each (at least at distance 1). Goal = m, so
// every target must be found.
Instance gen_all_targets(const StrategySpec& spec, int ray_count, int snapshot,
                         double epsilon = kDefaultEpsilon);

// Subset-search killer for the naive adaptive strategy: a decoy outside S
// found exactly at step `step`, and the sole S-member hidden just beyond the
// previous step's depth on the cyclically preceding ray. The naive ratio
// grows at least like (b_{m,2}/b_{m,1})^step. Requires m >= 3.
SubsetInstance gen_naive_killer(int ray_count, int step, double epsilon = kDefaultEpsilon);

struct AdversaryResult {
  Instance instance;
  double ratio = 0.0;
  bool budget_exhausted = false;  // best placement was the last one tried
};

// Generic driver: places `objective` unit-weight targets just beyond the
// strategy's explored depths, sweeping the placement event over a bounded
// schedule, and returns the worst instance found.
AdversaryResult adaptive_adversary(const StrategySpec& spec, int ray_count,
                                   int objective, int budget,
                                   double epsilon = kDefaultEpsilon);

}  // namespace starsearch
