#include "starsearch/engine.hpp"

#include <string>

namespace starsearch {

namespace {

// Goal policies decide when a run terminates. met() is checked before the
// first excursion and after every find.
struct WeightGoal {
  double goal;
  int present;
  double cumulative = 0.0;
  int found = 0;

  bool met() const {
    // finding every present target meets the goal of any feasible instance;
    // the explicit clause absorbs last-ulp rounding when goal == total weight
    return cumulative >= goal || found == present;
  }
  void on_find(int /*ray*/, const Target& t) {
    cumulative += t.weight;
    ++found;
  }
};

struct SubsetGoal {
  std::vector<bool> in_subset;
  int remaining;

  bool met() const { return remaining == 0; }
  void on_find(int ray, const Target&) {
    if (in_subset[static_cast<std::size_t>(ray)]) --remaining;
  }
};

template <typename Goal>
Trace run_loop(Strategy& strategy, const std::vector<std::optional<Target>>& targets,
               Goal goal, std::size_t max_excursions) {
  const int m = static_cast<int>(targets.size());
  Trace trace;
  if (goal.met()) return trace;

  std::vector<bool> cleared(targets.size(), false);
  std::optional<Feedback> feedback;

  for (std::size_t n = 0; n < max_excursions; ++n) {
    const Probe probe = strategy.next(feedback);
    if (probe.ray < 0 || probe.ray >= m) {
      throw protocol_error("strategy proposed ray " + std::to_string(probe.ray) +
                           " on an instance with " + std::to_string(m) + " rays");
    }
    if (cleared[static_cast<std::size_t>(probe.ray)]) {
      throw protocol_error("strategy revisited cleared ray " + std::to_string(probe.ray));
    }
    if (!(probe.depth > 0.0)) {
      throw protocol_error("strategy proposed a non-positive exploration depth");
    }

    const auto& target = targets[static_cast<std::size_t>(probe.ray)];
    Excursion e;
    e.ray = probe.ray;
    e.planned_depth = probe.depth;

    if (target && target->distance <= probe.depth) {
      e.found = true;
      e.distance = target->distance;
      e.weight = target->weight;
      cleared[static_cast<std::size_t>(probe.ray)] = true;
      goal.on_find(probe.ray, *target);
      const bool terminal = goal.met();
      e.cost = terminal ? target->distance : 2.0 * target->distance;
      trace.excursions.push_back(e);
      trace.total_cost += e.cost;
      trace.found.emplace_back(probe.ray, *target);
      if (terminal) return trace;
      feedback = Feedback{probe.ray, probe.depth, true, target->distance, target->weight};
    } else {
      if (probe.unbounded()) {
        throw protocol_error("unbounded excursion on a ray with no reachable target");
      }
      e.cost = 2.0 * probe.depth;
      trace.excursions.push_back(e);
      trace.total_cost += e.cost;
      feedback = Feedback{probe.ray, probe.depth, false, 0.0, 0.0};
    }
  }
  throw protocol_error("excursion limit exceeded without meeting the goal");
}

}  // namespace

Trace simulate(Strategy& strategy, const Instance& instance, std::size_t max_excursions) {
  instance.require_feasible();
  std::vector<std::optional<Target>> targets;
  targets.reserve(static_cast<std::size_t>(instance.ray_count()));
  for (int ray = 0; ray < instance.ray_count(); ++ray) {
    targets.push_back(instance.target(ray));
  }
  WeightGoal goal{instance.goal(), instance.target_count()};
  return run_loop(strategy, targets, goal, max_excursions);
}

Trace simulate_subset(Strategy& strategy, const SubsetInstance& instance,
                      std::size_t max_excursions) {
  instance.validate();
  std::vector<std::optional<Target>> targets;
  targets.reserve(static_cast<std::size_t>(instance.ray_count()));
  for (int ray = 0; ray < instance.ray_count(); ++ray) {
    const auto& d = instance.distance(ray);
    targets.push_back(d ? std::optional<Target>(Target{*d, 0.0}) : std::nullopt);
  }
  SubsetGoal goal{std::vector<bool>(targets.size(), false),
                  static_cast<int>(instance.subset().size())};
  for (int ray : instance.subset()) goal.in_subset[static_cast<std::size_t>(ray)] = true;
  return run_loop(strategy, targets, goal, max_excursions);
}

}  // namespace starsearch
