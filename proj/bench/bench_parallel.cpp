// Timing comparison between the OpenMP kernels and their serial references:
// offline subset enumeration, the two inequality sweeps, and a batch of
// subset-search simulations.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

#include "starsearch/analysis.hpp"
#include "starsearch/offline.hpp"
#include "starsearch/rng.hpp"
#include "starsearch/strategies.hpp"

using namespace starsearch;

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
  fn();  // warm up
  const auto start = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) fn();
  const auto elapsed = std::chrono::duration<double, std::milli>(
      std::chrono::steady_clock::now() - start);
  return elapsed.count() / reps;
}

void row(const char* kernel, double serial_ms, double parallel_ms) {
  std::printf("%-24s %10.2f %10.2f %8.2fx\n", kernel, serial_ms, parallel_ms,
              serial_ms / parallel_ms);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-24s %10s %10s %9s\n", "kernel", "serial/ms", "omp/ms", "speedup");

  {
    const auto insts =
        random_instances(2, 22, 1, 1.0, 100.0, 0.1, 5.0, WeightRule::fraction(0.5));
    const Instance& big = insts.front();
    volatile double sink = 0.0;
    const double serial = time_ms([&] { sink = analyze_instance_serial(big).opt; }, 3);
    const double parallel = time_ms([&] { sink = analyze_instance(big).opt; }, 3);
    (void)sink;
    row("subset enumeration m=22", serial, parallel);
  }

  {
    volatile bool sink = false;
    const double serial = time_ms([&] { sink = verify_phi_gap_serial(500000).pass; }, 3);
    const double parallel = time_ms([&] { sink = verify_phi_gap(500000).pass; }, 3);
    (void)sink;
    row("gap sweep q<=5e5", serial, parallel);
  }

  {
    volatile bool sink = false;
    const double serial = time_ms([&] { sink = verify_h_bound_serial(2000).pass; }, 3);
    const double parallel = time_ms([&] { sink = verify_h_bound(2000).pass; }, 3);
    (void)sink;
    row("factor sweep q<=2000", serial, parallel);
  }

  {
    const auto instances = random_subset_instances(7, 20000, 2, 8, 1.0, 100.0);
    auto run_batch = [&](bool parallel) {
      double total = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : total) if (parallel)
      for (long k = 0; k < static_cast<long>(instances.size()); ++k) {
        total += run_strategy({StrategyKind::AdaptiveSubset},
                              instances[static_cast<std::size_t>(k)])
                     .total_cost;
      }
      return total;
    };
    volatile double sink = 0.0;
    const double serial = time_ms([&] { sink = run_batch(false); }, 3);
    const double parallel = time_ms([&] { sink = run_batch(true); }, 3);
    (void)sink;
    row("simulation batch 20k", serial, parallel);
  }

  return 0;
}
