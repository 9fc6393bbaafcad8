#include "starsearch/phases.hpp"

#include <cmath>
#include <string>

#include "starsearch/analysis.hpp"
#include "starsearch/strategies.hpp"

namespace starsearch {

namespace {

bool depth_matches(double proposed, double recorded) {
  if (std::isinf(proposed) || std::isinf(recorded)) {
    return std::isinf(proposed) && std::isinf(recorded);
  }
  return std::abs(proposed - recorded) <= 1e-12 * std::max(1.0, std::abs(recorded));
}

}  // namespace

std::vector<PhaseRecord> cost_accounting(const Trace& trace, int ray_count) {
  std::vector<PhaseRecord> records;
  if (trace.excursions.empty()) return records;  // zero-goal run

  AdaptiveStrategy replay(ray_count);
  std::optional<Feedback> feedback;
  double depth_scale = 1.0;  // Y of the phase in progress
  int iterations = 0;

  for (const Excursion& e : trace.excursions) {
    const Probe p = replay.next(feedback);
    if (p.ray != e.ray || !depth_matches(p.depth, e.planned_depth)) {
      throw shape_error("trace was not produced by the adaptive strategy (excursion " +
                        std::to_string(records.size() + iterations) + ")");
    }
    ++iterations;
    if (e.found) {
      const int phase = static_cast<int>(records.size()) + 1;
      records.push_back(
          {phase, iterations, e.distance, depth_scale, std::isinf(e.planned_depth)});
      // Y_{j+1} = Y_j * b_{m,j}^(l_j - 1); only needed if another phase follows,
      // where phase < m holds and the base is defined
      if (phase < ray_count) {
        depth_scale *= std::pow(growth_base_mt(ray_count, phase),
                                static_cast<double>(iterations - 1));
      }
      iterations = 0;
    }
    feedback = Feedback{e.ray, e.planned_depth, e.found, e.distance, e.weight};
  }

  if (!trace.excursions.back().found) {
    throw shape_error("trace does not end at a terminal discovery");
  }
  return records;
}

std::vector<PhaseRecord> cost_accounting(const Trace& trace, const Instance& instance) {
  return cost_accounting(trace, instance.ray_count());
}

std::vector<PhaseRecord> cost_accounting(const Trace& trace,
                                         const SubsetInstance& instance) {
  return cost_accounting(trace, instance.ray_count());
}

double phase_cost_value(const std::vector<PhaseRecord>& phases, int ray_count) {
  double value = 0.0;
  for (std::size_t i = 0; i < phases.size(); ++i) {
    const PhaseRecord& rec = phases[i];
    const bool final_phase = (i + 1 == phases.size());
    if (!rec.unbounded_final) {
      const double b = growth_base_mt(ray_count, rec.phase);
      value += 2.0 * rec.depth_scale *
               (std::pow(b, static_cast<double>(rec.iterations)) - b) / (b - 1.0);
    }
    // the unbounded sweep has no unsuccessful excursions to account for
    value += final_phase ? rec.found_distance : 2.0 * rec.found_distance;
  }
  return value;
}

}  // namespace starsearch
