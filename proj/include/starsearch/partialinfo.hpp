#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "starsearch/engine.hpp"
#include "starsearch/types.hpp"

namespace starsearch {

inline constexpr int kMaxPresentationRays = 8;
inline constexpr int kMaxIntrinsicRays = 4;

// Partial information about an instance: the multiset of (distance, weight)
// pairs and the goal, but not which pair sits on which ray.
class PartialMultiset {
 public:
  PartialMultiset(std::vector<Target> pairs, double goal);

  int ray_count() const noexcept { return static_cast<int>(pairs_.size()); }
  double goal() const noexcept { return goal_; }
  const std::vector<Target>& pairs() const noexcept { return pairs_; }

 private:
  std::vector<Target> pairs_;  // sorted by (distance, weight)
  double goal_;
};

// Every distinct assignment of the multiset to rays, each exactly once.
std::vector<Instance> presentations(const PartialMultiset& lambda);

// Exact minimax value of offline search under partial information: the best
// strategy knowing the multiset against the worst consistent presentation.
// Excursion depths are discretized to the distances present in the multiset
// (deeper probes reveal nothing extra) and the adversary commits lazily,
// which is equivalent to the max over presentations for deterministic
// strategies. Guarded to small ray counts.
double intrinsic_cost(const PartialMultiset& lambda);

// Signed search: one target per ray with weight 0 or 1; the goal is any one
// 1-target.
struct SignedInstance {
  std::vector<Target> targets;  // weights in {0, 1}

  int ray_count() const noexcept { return static_cast<int>(targets.size()); }
  Instance to_instance() const;        // weighted view with goal 1
  PartialMultiset to_multiset() const; // its partial-information set
};

// The found/remaining split: targets in `found_rays` get weight 0, the rest
// get weight W (the weighted re-instance), mapped to signs 0/1 (the signed
// re-instance). Every ray must carry a target and at least one must remain.
std::pair<Instance, SignedInstance> reduce_ws_instance(const Instance& instance,
                                                       const std::vector<int>& found_rays);

// Wraps a signed-search strategy into a weighted-search one: every located
// target is reported to the inner strategy as weightless, and the engine's
// weighted goal decides termination. The wrapped run on I and the inner run
// on the signed re-instance traverse identical excursions.
std::unique_ptr<Strategy> ws_from_signed(std::unique_ptr<Strategy> inner);

// Stand-in signed strategy: geometric cyclic search with base b_{m,1},
// skipping rays whose target was found, unbounded sweep when one ray is
// left. Any conforming signed strategy can be plugged in instead.
std::unique_ptr<Strategy> signed_baseline(int ray_count);

}  // namespace starsearch
