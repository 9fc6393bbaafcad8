#pragma once

#include <cmath>
#include <cstddef>
#include <optional>

#include "starsearch/types.hpp"

namespace starsearch {

// A proposed excursion: ray index and planned depth. An infinite depth means
// the searcher walks the ray until it hits a target, never returning.
struct Probe {
  int ray = 0;
  double depth = 0.0;

  bool unbounded() const { return std::isinf(depth); }
};

// Post-excursion feedback pushed by the engine to the strategy.
struct Feedback {
  int ray = 0;
  double planned_depth = 0.0;
  bool found = false;
  double distance = 0.0;
  double weight = 0.0;  // zero in subset-search runs
};

// A deterministic search strategy. next() is called whenever the searcher is
// at the origin; `last` is empty on the first call and otherwise reports the
// outcome of the previous excursion. Strategies never see the excursion that
// meets the goal (the run ends there).
class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual Probe next(const std::optional<Feedback>& last) = 0;
};

inline constexpr std::size_t kDefaultMaxExcursions = 1'000'000;

// Runs a strategy against a weighted instance until the cumulative weight of
// discovered targets reaches the goal. A target sitting exactly at the
// planned depth counts as found. Throws feasibility_error for infeasible
// instances and protocol_error for invalid proposals (cleared ray,
// non-positive depth, unbounded sweep of a target-free ray).
Trace simulate(Strategy& strategy, const Instance& instance,
               std::size_t max_excursions = kDefaultMaxExcursions);

// Subset-search run: terminates once every ray in S has yielded its target.
// Finds outside S do not terminate the run.
Trace simulate_subset(Strategy& strategy, const SubsetInstance& instance,
                      std::size_t max_excursions = kDefaultMaxExcursions);

}  // namespace starsearch
