#pragma once

#include <vector>

#include "starsearch/types.hpp"

namespace starsearch {

// Per-phase bookkeeping of an adaptive-strategy run. Phase j is the maximal
// trace segment with j-1 targets found; it spans `iterations` excursions and
// ends with the j-th find at `found_distance`. `depth_scale` is the product
// of the growth factors accumulated before the phase (1 for phase 1).
struct PhaseRecord {
  int phase = 0;
  int iterations = 0;
  double found_distance = 0.0;
  double depth_scale = 1.0;
  bool unbounded_final = false;  // phase ran as the single-ray sweep

  bool operator==(const PhaseRecord&) const = default;
};

// Reconstructs the phase structure of a trace, replaying the adaptive
// strategy against the recorded outcomes and validating every proposal.
// Throws shape_error if the trace was not produced by the adaptive strategy
// or does not end at a terminal discovery.
std::vector<PhaseRecord> cost_accounting(const Trace& trace, int ray_count);
std::vector<PhaseRecord> cost_accounting(const Trace& trace, const Instance& instance);
std::vector<PhaseRecord> cost_accounting(const Trace& trace, const SubsetInstance& instance);

// Exact closed-form cost of a phase decomposition:
//   2 * sum_j Y_j (b^(l_j) - b) / (b - 1)  +  2 * sum_{j<t} D_j  +  D_t
// with b = b_{m,j} per phase; an unbounded final phase contributes D_t only.
// Equals the trace's total cost to 1e-9 relative.
double phase_cost_value(const std::vector<PhaseRecord>& phases, int ray_count);

}  // namespace starsearch
