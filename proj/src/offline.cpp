#include "starsearch/offline.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "starsearch/analysis.hpp"

namespace starsearch {

namespace {

constexpr double kTieTolerance = 1e-12;

void check_enumerable(const Instance& instance) {
  if (instance.ray_count() > kMaxEnumerationRays) {
    throw capacity_error("offline enumeration is limited to " +
                         std::to_string(kMaxEnumerationRays) + " rays");
  }
}

struct MaskData {
  double cost;
  double weight;
  bool feasible;  // all members present and w_S >= goal
};

MaskData mask_data(const Instance& instance, std::uint32_t mask) {
  double sum = 0.0, far = 0.0, weight = 0.0;
  for (std::uint32_t bits = mask; bits != 0; bits &= bits - 1) {
    const int ray = std::countr_zero(bits);
    const auto& t = instance.target(ray);
    if (!t) return {0.0, 0.0, false};
    sum += t->distance;
    far = std::max(far, t->distance);
    weight += t->weight;
  }
  return {2.0 * sum - far, weight, weight >= instance.goal()};
}

// One enumeration pass: minimum feasible cost plus the two xi numerators.
struct PassResult {
  double opt = std::numeric_limits<double>::infinity();
  double xi_num = std::numeric_limits<double>::infinity();
  double xig_num = std::numeric_limits<double>::infinity();
};

PassResult enumerate_serial(const Instance& instance) {
  PassResult r;
  const int m = instance.ray_count();
  const std::uint32_t end = 1u << m;
  for (std::uint32_t mask = 1; mask < end; ++mask) {
    const MaskData d = mask_data(instance, mask);
    if (!d.feasible) continue;
    r.opt = std::min(r.opt, d.cost);
    const int size = std::popcount(mask);
    const double lit = size < m ? phi(static_cast<double>(m - size)) : phi(0.0);
    r.xi_num = std::min(r.xi_num, lit * d.cost);
    r.xig_num = std::min(r.xig_num, ratio_guarantee(m, size) * d.cost);
  }
  return r;
}

PassResult enumerate_parallel(const Instance& instance) {
  PassResult r;
  const int m = instance.ray_count();
  const long long end = 1ll << m;
#pragma omp parallel
  {
    PassResult local;
#pragma omp for schedule(static) nowait
    for (long long mask = 1; mask < end; ++mask) {
      const MaskData d = mask_data(instance, static_cast<std::uint32_t>(mask));
      if (!d.feasible) continue;
      local.opt = std::min(local.opt, d.cost);
      const int size = std::popcount(static_cast<std::uint32_t>(mask));
      const double lit = size < m ? phi(static_cast<double>(m - size)) : phi(0.0);
      local.xi_num = std::min(local.xi_num, lit * d.cost);
      local.xig_num = std::min(local.xig_num, ratio_guarantee(m, size) * d.cost);
    }
#pragma omp critical
    {
      r.opt = std::min(r.opt, local.opt);
      r.xi_num = std::min(r.xi_num, local.xi_num);
      r.xig_num = std::min(r.xig_num, local.xig_num);
    }
  }
  return r;
}

OfflineSummary summarize(const Instance& instance, const PassResult& pass) {
  OfflineSummary out;
  const int m = instance.ray_count();

  if (instance.goal() == 0.0) {
    // empty-set convention: nothing to find, and xi is undefined
    out.opt = 0.0;
    out.s = 0;
    out.xi = std::numeric_limits<double>::quiet_NaN();
    out.xi_guarantee = std::numeric_limits<double>::quiet_NaN();
    out.optimal_subsets = {0};
    return out;
  }

  out.opt = pass.opt;
  out.xi = pass.xi_num / pass.opt;
  out.xi_guarantee = pass.xig_num / pass.opt;

  const double tol = kTieTolerance * std::max(1.0, out.opt);
  const std::uint32_t end = 1u << m;
  for (std::uint32_t mask = 1; mask < end; ++mask) {
    const MaskData d = mask_data(instance, mask);
    if (!d.feasible || std::abs(d.cost - out.opt) > tol) continue;
    out.optimal_subsets.push_back(mask);
    out.s = std::max(out.s, std::popcount(mask));
  }
  return out;
}

}  // namespace

double subset_cost(const Instance& instance, std::uint32_t mask) {
  if (instance.ray_count() < 32 && (mask >> instance.ray_count()) != 0) {
    throw std::invalid_argument("subset mask references rays beyond the instance");
  }
  if (mask == 0) return 0.0;
  double sum = 0.0, far = 0.0;
  for (std::uint32_t bits = mask; bits != 0; bits &= bits - 1) {
    const int ray = std::countr_zero(bits);
    const auto& t = instance.target(ray);
    if (!t) {
      throw std::invalid_argument("subset member " + std::to_string(ray) +
                                  " has no target");
    }
    sum += t->distance;
    far = std::max(far, t->distance);
  }
  return 2.0 * sum - far;
}

double subset_cost(const Instance& instance, const std::vector<int>& rays) {
  std::uint32_t mask = 0;
  for (int ray : rays) {
    if (ray < 0 || ray >= 32) throw std::invalid_argument("ray index out of range");
    mask |= 1u << ray;
  }
  return subset_cost(instance, mask);
}

double subset_cost(const SubsetInstance& instance) {
  instance.validate();
  double sum = 0.0, far = 0.0;
  for (int ray : instance.subset()) {
    const double d = *instance.distance(ray);
    sum += d;
    far = std::max(far, d);
  }
  return 2.0 * sum - far;
}

OfflineSummary analyze_instance(const Instance& instance) {
  check_enumerable(instance);
  instance.require_feasible();
  return summarize(instance, enumerate_parallel(instance));
}

OfflineSummary analyze_instance_serial(const Instance& instance) {
  check_enumerable(instance);
  instance.require_feasible();
  return summarize(instance, enumerate_serial(instance));
}

double optimal_cost(const Instance& instance) { return analyze_instance(instance).opt; }

int s_value(const Instance& instance) { return analyze_instance(instance).s; }

double refined_bound(const Instance& instance) {
  const OfflineSummary summary = analyze_instance(instance);
  if (summary.opt == 0.0) {
    throw degenerate_error("xi is undefined for zero-goal instances (opt = 0)");
  }
  return summary.xi;
}

}  // namespace starsearch
