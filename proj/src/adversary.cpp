#include "starsearch/adversary.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "starsearch/analysis.hpp"
#include "starsearch/engine.hpp"
#include "starsearch/offline.hpp"

namespace starsearch {

namespace {

struct ExploreEvent {
  int ray = 0;
  double depth = 0.0;
  bool found = false;
};

struct Exploration {
  std::vector<ExploreEvent> events;
  std::vector<double> depth_by_ray;  // max explored depth per ray
  double max_depth = 0.0;
  int finds = 0;
};

// Bounded strategy run with no termination goal; used to derive placements.
Exploration explore(Strategy& strategy, const std::vector<std::optional<Target>>& targets,
                    int excursions) {
  Exploration result;
  result.depth_by_ray.assign(targets.size(), 0.0);
  std::vector<bool> cleared(targets.size(), false);
  std::optional<Feedback> feedback;

  for (int n = 0; n < excursions; ++n) {
    const Probe probe = strategy.next(feedback);
    if (probe.ray < 0 || probe.ray >= static_cast<int>(targets.size()) ||
        cleared[static_cast<std::size_t>(probe.ray)] || !(probe.depth > 0.0)) {
      throw generation_error("strategy violated the excursion protocol during placement");
    }
    const auto& target = targets[static_cast<std::size_t>(probe.ray)];
    if (target && target->distance <= probe.depth) {
      cleared[static_cast<std::size_t>(probe.ray)] = true;
      ++result.finds;
      result.events.push_back({probe.ray, probe.depth, true});
      result.depth_by_ray[static_cast<std::size_t>(probe.ray)] =
          std::max(result.depth_by_ray[static_cast<std::size_t>(probe.ray)],
                   target->distance);
      feedback = Feedback{probe.ray, probe.depth, true, target->distance, target->weight};
    } else {
      if (probe.unbounded()) {
        throw generation_error("strategy never returns to the origin (unbounded sweep)");
      }
      result.events.push_back({probe.ray, probe.depth, false});
      result.depth_by_ray[static_cast<std::size_t>(probe.ray)] = std::max(
          result.depth_by_ray[static_cast<std::size_t>(probe.ray)], probe.depth);
      result.max_depth = std::max(result.max_depth, probe.depth);
      feedback = Feedback{probe.ray, probe.depth, false, 0.0, 0.0};
    }
  }
  return result;
}

// Cheap-crowd placement: `cheap` unit-distance targets on the first rays,
// then the far target just beyond the adaptive strategy's step-th probe
// after the cheap finds. Decoys go out of the run's reach.
struct CheapFarPlacement {
  int far_ray = 0;
  double far_distance = 0.0;
  double unreachable = 0.0;
};

CheapFarPlacement place_cheap_far(int m, int cheap, int step, double epsilon) {
  std::vector<std::optional<Target>> partial(static_cast<std::size_t>(m));
  for (int ray = 0; ray < cheap; ++ray) partial[static_cast<std::size_t>(ray)] = Target{1.0, 1.0};

  AdaptiveStrategy strategy(m);
  const int live_after = m - cheap;
  const int total = cheap + step + live_after + 1;
  const Exploration run = explore(strategy, partial, total);

  for (int i = 0; i < cheap; ++i) {
    if (!run.events[static_cast<std::size_t>(i)].found) {
      throw generation_error("cheap targets were not collected first");
    }
  }
  const ExploreEvent& probe = run.events[static_cast<std::size_t>(cheap + step - 1)];
  if (probe.found) throw generation_error("placement probe unexpectedly found a target");

  CheapFarPlacement out;
  out.far_ray = probe.ray;
  out.far_distance = probe.depth + epsilon;
  out.unreachable = std::max(4.0 * run.max_depth, 4.0 * out.far_distance);
  return out;
}

}  // namespace

std::vector<ScheduledProbe> probe_schedule(const StrategySpec& spec, int ray_count,
                                           int count) {
  auto strategy = make_strategy(spec, ray_count);
  const Exploration run =
      explore(*strategy, std::vector<std::optional<Target>>(
                             static_cast<std::size_t>(ray_count)),
              count);
  std::vector<ScheduledProbe> probes;
  probes.reserve(run.events.size());
  for (const ExploreEvent& e : run.events) probes.push_back({e.ray, e.depth});
  return probes;
}

Instance gen_single_target(int ray_count, int step, double epsilon) {
  if (step < 1) throw std::invalid_argument("schedule step must be positive");
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  const auto schedule =
      probe_schedule({StrategyKind::AdaptiveSubset}, ray_count, step);
  const ScheduledProbe& probe = schedule[static_cast<std::size_t>(step - 1)];
  Instance inst(ray_count, 1.0);
  inst.set_target(probe.ray, probe.depth + epsilon, 1.0);
  return inst;
}

Instance gen_subsets_lb(int ray_count, int s, int step, double epsilon) {
  if (s < 1 || s > ray_count - 1) {
    throw std::invalid_argument("cardinality s must be in [1, m-1]");
  }
  if (step < 1) throw std::invalid_argument("schedule step must be positive");
  if (s == 1) return gen_single_target(ray_count, step, epsilon);

  const CheapFarPlacement p = place_cheap_far(ray_count, s - 1, step, epsilon);
  Instance inst(ray_count, static_cast<double>(s));
  for (int ray = 0; ray < s - 1; ++ray) inst.set_target(ray, 1.0, 1.0);
  inst.set_target(p.far_ray, p.far_distance, 1.0);
  for (int ray = 0; ray < ray_count; ++ray) {
    if (!inst.has_target(ray)) inst.set_target(ray, p.unreachable, 0.0);
  }
  return inst;
}

Instance gen_weights_lb(int ray_count, double t_real, int step, double epsilon) {
  if (!(t_real > 0.0) || !(t_real < ray_count)) {
    throw std::invalid_argument("t must satisfy 0 < t < m");
  }
  const int forced = static_cast<int>(std::ceil(t_real));
  if (forced >= ray_count) {
    throw std::invalid_argument(
        "ceil(t) = m forces every target; use gen_all_targets for that regime");
  }
  if (step < 1) throw std::invalid_argument("schedule step must be positive");

  Instance inst(ray_count, t_real);
  if (forced == 1) {
    const auto schedule =
        probe_schedule({StrategyKind::AdaptiveSubset}, ray_count, step + 1);
    const ScheduledProbe& probe = schedule[static_cast<std::size_t>(step - 1)];
    double deepest = 0.0;
    for (const auto& sp : schedule) deepest = std::max(deepest, sp.depth);
    inst.set_target(probe.ray, probe.depth + epsilon, 1.0);
    for (int ray = 0; ray < ray_count; ++ray) {
      if (!inst.has_target(ray)) inst.set_target(ray, 4.0 * deepest, 1.0);
    }
    return inst;
  }

  const CheapFarPlacement p = place_cheap_far(ray_count, forced - 1, step, epsilon);
  for (int ray = 0; ray < forced - 1; ++ray) inst.set_target(ray, 1.0, 1.0);
  inst.set_target(p.far_ray, p.far_distance, 1.0);
  for (int ray = 0; ray < ray_count; ++ray) {
    if (!inst.has_target(ray)) inst.set_target(ray, p.unreachable, 1.0);
  }
  return inst;
}

Instance gen_all_targets(const StrategySpec& spec, int ray_count, int snapshot,
                         double epsilon) {
  if (snapshot < 0) throw std::invalid_argument("snapshot index must be nonnegative");
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  auto strategy = make_strategy(spec, ray_count);
  const Exploration run =
      explore(*strategy, std::vector<std::optional<Target>>(
                             static_cast<std::size_t>(ray_count)),
              snapshot);
  Instance inst(ray_count, static_cast<double>(ray_count));
  for (int ray = 0; ray < ray_count; ++ray) {
    const double depth = run.depth_by_ray[static_cast<std::size_t>(ray)];
    inst.set_target(ray, std::max(depth, 1.0) + epsilon, 1.0);
  }
  return inst;
}

SubsetInstance gen_naive_killer(int ray_count, int step, double epsilon) {
  if (ray_count < 3) throw std::invalid_argument("killer family requires m >= 3");
  if (step < 1) throw std::invalid_argument("schedule step must be positive");
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");

  const auto schedule = probe_schedule({StrategyKind::NaiveAdaptive}, ray_count, step);
  const ScheduledProbe& hit = schedule[static_cast<std::size_t>(step - 1)];
  const int goal_ray = (hit.ray - 1 + ray_count) % ray_count;
  // just beyond the depth the goal ray reached before the decoy find
  const double goal_distance =
      (step >= 2 ? schedule[static_cast<std::size_t>(step - 2)].depth : 1.0) + epsilon;

  SubsetInstance inst(ray_count);
  inst.set_distance(hit.ray, hit.depth);  // decoy found exactly at the planned depth
  inst.set_distance(goal_ray, goal_distance);
  inst.set_subset({goal_ray});
  return inst;
}

AdversaryResult adaptive_adversary(const StrategySpec& spec, int ray_count,
                                   int objective, int budget, double epsilon) {
  if (objective < 1 || objective > ray_count) {
    throw std::invalid_argument("objective must be in [1, m]");
  }
  if (budget < 1) throw std::invalid_argument("placement budget must be positive");

  AdversaryResult best{Instance(ray_count, 0.0), -1.0, false};
  int best_event = -1;
  int last_event = -1;

  auto consider = [&](const Instance& candidate, int event) {
    const Trace trace = run_strategy(spec, candidate);
    const double opt = analyze_instance(candidate).opt;
    const double ratio = trace.total_cost / opt;
    last_event = event;
    if (ratio > best.ratio) {
      best.instance = candidate;
      best.ratio = ratio;
      best_event = event;
    }
  };

  if (objective == ray_count) {
    for (int snapshot = 0; snapshot <= budget; ++snapshot) {
      consider(gen_all_targets(spec, ray_count, snapshot, epsilon), snapshot);
    }
  } else if (objective == 1) {
    const auto schedule = probe_schedule(spec, ray_count, budget);
    for (int i = 1; i <= budget; ++i) {
      const ScheduledProbe& probe = schedule[static_cast<std::size_t>(i - 1)];
      Instance candidate(ray_count, 1.0);
      candidate.set_target(probe.ray, probe.depth + epsilon, 1.0);
      consider(candidate, i);
    }
  } else {
    // cheap crowd against the strategy's own schedule
    const int cheap = objective - 1;
    std::vector<std::optional<Target>> partial(static_cast<std::size_t>(ray_count));
    for (int ray = 0; ray < cheap; ++ray) {
      partial[static_cast<std::size_t>(ray)] = Target{1.0, 1.0};
    }
    auto strategy = make_strategy(spec, ray_count);
    const Exploration run = explore(*strategy, partial, budget + 4 * ray_count);
    int finds = 0;
    int last_cheap = -1;
    for (std::size_t i = 0; i < run.events.size(); ++i) {
      if (run.events[i].found && ++finds == cheap) {
        last_cheap = static_cast<int>(i);
        break;
      }
    }
    if (last_cheap < 0) throw generation_error("strategy never collected the cheap targets");

    int swept = 0;
    for (std::size_t i = static_cast<std::size_t>(last_cheap) + 1;
         i < run.events.size() && swept < budget; ++i) {
      const ExploreEvent& e = run.events[i];
      if (e.found) continue;
      ++swept;
      Instance candidate(ray_count, static_cast<double>(objective));
      for (int ray = 0; ray < cheap; ++ray) candidate.set_target(ray, 1.0, 1.0);
      candidate.set_target(e.ray, e.depth + epsilon, 1.0);
      const double unreachable = std::max(4.0 * run.max_depth, 4.0 * (e.depth + epsilon));
      for (int ray = 0; ray < ray_count; ++ray) {
        if (!candidate.has_target(ray)) candidate.set_target(ray, unreachable, 0.0);
      }
      consider(candidate, static_cast<int>(i));
    }
  }

  best.budget_exhausted = best_event == last_event;
  return best;
}

}  // namespace starsearch
