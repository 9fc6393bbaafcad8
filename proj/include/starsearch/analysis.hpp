#pragma once

#include <numbers>

namespace starsearch {

// Competitive ratio of all-targets search in the extreme case.
inline constexpr double kExtremeBound = 3.0 + 2.0 * std::numbers::e;

// phi(x) = 1 + 2(1+x)(1+1/x)^x for x > 0, with phi(0) = 3 by continuity.
// This is the worst-case ratio function: phi(m-1) for single-target search
// on m rays. Throws std::invalid_argument for x < 0.
double phi(double x);

// Same function written as 1 + 2 b^(x+1)/(b-1) with b = 1 + 1/x. Kept as an
// independent evaluation route; agrees with phi() to 1e-12 relative.
double phi_via_base(double x);

// Growth base b_x = 1 + 1/x (x > 0).
double growth_base(double x);

// Growth base used after t-1 targets have been found on m rays:
// b_{m,t} = 1 + 1/(m-t). Requires 1 <= t < m; t >= m is the single-ray
// regime where no finite base applies.
double growth_base_mt(int m, int t);

// Guaranteed ratio for locating a size-s goal set on m rays: phi(m-s) when
// s < m, and 3+2e when s = m.
double ratio_guarantee(int m, int subset_size);

// Normalized phase-transition factor from the cost analysis; at most 1 for
// all q >= 1 and 1 <= ell <= q+1, with value exactly 1 at ell = 1.
double transition_factor(int q, int ell);

struct PhiGapReport {
  bool pass = false;
  int q_max = 0;
  double min_gap = 0.0;       // min over q of phi(q) - phi(q-1)
  int min_gap_q = 0;
  double min_slack = 0.0;     // min_gap - 2e
  double tail_half_gap = 0.0; // (phi(q_max) - phi(q_max - 1)) / 2, limit e
  bool phi_monotone = false;
  bool half_gap_decreasing = false;  // from q = 3 on
};

// Checks phi(q) - phi(q-1) >= 2e for q in [1, q_max], monotonicity of phi,
// and that the half-gap sequence decreases toward e. The half-gap sequence
// is evaluated in extended precision: its decrements shrink like 1/q^3 and
// fall below double cancellation noise near q = 1e4.
PhiGapReport verify_phi_gap(int q_max);
PhiGapReport verify_phi_gap_serial(int q_max);

struct HBoundReport {
  bool pass = false;
  int q_max = 0;
  long long evaluated = 0;
  double max_factor = 0.0;
  int argmax_q = 0;
  int argmax_ell = 0;
  double boundary_max_error = 0.0;   // max |transition_factor(q,1) - 1|
  bool interior_below_edges = false; // convexity: max attained at ell in {1, q+1}
};

// Checks transition_factor(q, ell) <= 1 + 1e-12 over q in [1, q_max],
// ell in [1, q+1].
HBoundReport verify_h_bound(int q_max);
HBoundReport verify_h_bound_serial(int q_max);

}  // namespace starsearch
