#pragma once

#include <cstdint>
#include <vector>

#include "starsearch/types.hpp"

namespace starsearch {

// Exhaustive enumeration is the trust anchor; beyond this many rays the
// offline oracles refuse with capacity_error.
inline constexpr int kMaxEnumerationRays = 24;

// Optimal offline cost of visiting the rays in `mask` / `rays`:
//   2 * sum d_i - max d_i  (the farthest target is visited last, no return).
// Every member ray must carry a target. The empty set costs 0.
double subset_cost(const Instance& instance, std::uint32_t mask);
double subset_cost(const Instance& instance, const std::vector<int>& rays);

// d_S of a subset-search instance's own goal set.
double subset_cost(const SubsetInstance& instance);

struct OfflineSummary {
  double opt = 0.0;
  int s = 0;                 // max cardinality among optimal subsets
  double xi = 0.0;           // min over feasible S of phi(m-|S|) d_S / opt;
                             // NaN when goal = 0 (opt = 0)
  double xi_guarantee = 0.0; // same minimum with 3+2e in place of phi(0)
                             // for |S| = m; the value the upper-bound
                             // theorems actually certify
  std::vector<std::uint32_t> optimal_subsets;  // ascending bitmasks
};

// Full enumeration over feasible subsets (w_S >= W). Parallelized with a
// deterministic reduction; analyze_instance_serial is the plain loop kept
// as a reference.
OfflineSummary analyze_instance(const Instance& instance);
OfflineSummary analyze_instance_serial(const Instance& instance);

// Individual oracles, each a view over analyze_instance.
double optimal_cost(const Instance& instance);               // opt(I)
int s_value(const Instance& instance);                       // s_I
double refined_bound(const Instance& instance);              // xi(I); throws
                                                             // degenerate_error
                                                             // when opt = 0

}  // namespace starsearch
