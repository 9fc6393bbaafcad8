#include "starsearch/analysis.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace starsearch {

namespace {

constexpr double kSlack = 1e-12;

// (1+x)(1+1/x)^x, the half-excess of phi; 1 at x = 0 by continuity.
// Evaluated in log space: rounding 1+1/x before pow costs x ulp of accuracy,
// which already breaks 1e-12 agreement near x = 1e4.
double phi_half(double x) {
  if (x == 0.0) return 1.0;
  return (1.0 + x) * std::exp(x * std::log1p(1.0 / x));
}

// Extended-precision variant. The gap sequence phi(q) - phi(q-1) decreases
// toward 2e by amounts that shrink like 1/q^3; near q = 1e4 those amounts
// drop under double cancellation noise, so the monotonicity checks run on
// long double.
long double phi_half_l(long double x) {
  if (x == 0.0L) return 1.0L;
  return (1.0L + x) * std::exp(x * std::log1p(1.0L / x));
}

long double half_gap_l(int q) { return phi_half_l(q) - phi_half_l(q - 1); }

}  // namespace

double phi(double x) {
  if (!(x >= 0.0)) throw std::invalid_argument("phi requires x >= 0");
  return 1.0 + 2.0 * phi_half(x);
}

double phi_via_base(double x) {
  if (!(x > 0.0)) throw std::invalid_argument("phi_via_base requires x > 0");
  const double b = 1.0 + 1.0 / x;
  return 1.0 + 2.0 * std::pow(b, x + 1.0) / (b - 1.0);
}

double growth_base(double x) {
  if (!(x > 0.0)) throw std::invalid_argument("growth base requires x > 0");
  return 1.0 + 1.0 / x;
}

double growth_base_mt(int m, int t) {
  if (t < 1 || t >= m) {
    throw std::invalid_argument("growth_base_mt requires 1 <= t < m (t = " +
                                std::to_string(t) + ", m = " + std::to_string(m) +
                                "); t >= m is the single-ray regime");
  }
  return growth_base(static_cast<double>(m - t));
}

double ratio_guarantee(int m, int subset_size) {
  if (subset_size < 1 || subset_size > m) {
    throw std::invalid_argument("subset size out of range");
  }
  return subset_size < m ? phi(static_cast<double>(m - subset_size)) : kExtremeBound;
}

double transition_factor(int q, int ell) {
  if (q < 1) throw std::invalid_argument("transition_factor requires q >= 1");
  if (ell < 1 || ell > q + 1) {
    throw std::invalid_argument("transition_factor requires 1 <= ell <= q+1");
  }
  const double bq = 1.0 + 1.0 / q;
  const double bq1 = 1.0 + 1.0 / (q + 1);
  return std::pow(bq1, -(ell + 1.0)) * (std::pow(bq, ell) / (bq - 1.0) + 1.0 + bq1) *
         (bq1 - 1.0);
}

PhiGapReport verify_phi_gap_serial(int q_max) {
  if (q_max < 1) throw std::invalid_argument("q_max must be positive");
  PhiGapReport rep;
  rep.q_max = q_max;
  rep.min_gap = 1e300;
  rep.min_gap_q = 0;
  rep.phi_monotone = true;
  rep.half_gap_decreasing = true;

  const long double two_e = 2.0L * 2.718281828459045235360287471352662498L;
  long double prev_half_gap = 0.0L;
  for (int q = 1; q <= q_max; ++q) {
    const long double hg = half_gap_l(q);
    const double gap = static_cast<double>(2.0L * hg);
    if (gap < rep.min_gap) {
      rep.min_gap = gap;
      rep.min_gap_q = q;
    }
    if (!(gap > 0.0)) rep.phi_monotone = false;
    if (q >= 3 && static_cast<double>(hg - prev_half_gap) > kSlack) {
      rep.half_gap_decreasing = false;
    }
    prev_half_gap = hg;
    if (q == q_max) rep.tail_half_gap = static_cast<double>(hg);
  }
  rep.min_slack = static_cast<double>(static_cast<long double>(rep.min_gap) - two_e);
  rep.pass = rep.phi_monotone && rep.half_gap_decreasing && rep.min_slack >= -kSlack;
  return rep;
}

PhiGapReport verify_phi_gap(int q_max) {
  if (q_max < 1) throw std::invalid_argument("q_max must be positive");
  PhiGapReport rep;
  rep.q_max = q_max;
  rep.min_gap = 1e300;
  rep.min_gap_q = 0;
  rep.phi_monotone = true;
  rep.half_gap_decreasing = true;

  double min_gap = 1e300;
  int min_gap_q = 0;
  bool monotone = true;
  bool decreasing = true;

#pragma omp parallel
  {
    double local_min = 1e300;
    int local_q = 0;
    bool local_mono = true;
    bool local_dec = true;
#pragma omp for schedule(static) nowait
    for (int q = 1; q <= q_max; ++q) {
      const long double hg = half_gap_l(q);
      const double gap = static_cast<double>(2.0L * hg);
      if (gap < local_min || (gap == local_min && q < local_q)) {
        local_min = gap;
        local_q = q;
      }
      if (!(gap > 0.0)) local_mono = false;
      // each q recomputes its predecessor's gap; keeps the loop independent
      if (q >= 3 && static_cast<double>(hg - half_gap_l(q - 1)) > kSlack) {
        local_dec = false;
      }
    }
#pragma omp critical
    {
      if (local_min < min_gap || (local_min == min_gap && local_q < min_gap_q)) {
        min_gap = local_min;
        min_gap_q = local_q;
      }
      monotone = monotone && local_mono;
      decreasing = decreasing && local_dec;
    }
  }

  rep.min_gap = min_gap;
  rep.min_gap_q = min_gap_q;
  rep.phi_monotone = monotone;
  rep.half_gap_decreasing = decreasing;
  rep.tail_half_gap = static_cast<double>(half_gap_l(q_max));
  const long double two_e = 2.0L * 2.718281828459045235360287471352662498L;
  rep.min_slack = static_cast<double>(static_cast<long double>(rep.min_gap) - two_e);
  rep.pass = rep.phi_monotone && rep.half_gap_decreasing && rep.min_slack >= -kSlack;
  return rep;
}

HBoundReport verify_h_bound_serial(int q_max) {
  if (q_max < 1) throw std::invalid_argument("q_max must be positive");
  HBoundReport rep;
  rep.q_max = q_max;
  rep.max_factor = -1e300;
  rep.interior_below_edges = true;

  for (int q = 1; q <= q_max; ++q) {
    const double edge = std::max(transition_factor(q, 1), transition_factor(q, q + 1));
    for (int ell = 1; ell <= q + 1; ++ell) {
      const double v = transition_factor(q, ell);
      ++rep.evaluated;
      if (v > rep.max_factor) {
        rep.max_factor = v;
        rep.argmax_q = q;
        rep.argmax_ell = ell;
      }
      if (ell > 1 && ell < q + 1 && v > edge + kSlack) rep.interior_below_edges = false;
    }
    rep.boundary_max_error =
        std::max(rep.boundary_max_error, std::abs(transition_factor(q, 1) - 1.0));
  }

  rep.pass = rep.max_factor <= 1.0 + kSlack && rep.boundary_max_error <= kSlack &&
             rep.interior_below_edges;
  return rep;
}

HBoundReport verify_h_bound(int q_max) {
  if (q_max < 1) throw std::invalid_argument("q_max must be positive");
  HBoundReport rep;
  rep.q_max = q_max;
  rep.max_factor = -1e300;
  rep.interior_below_edges = true;

  double max_factor = -1e300;
  int argmax_q = 0, argmax_ell = 0;
  double boundary_err = 0.0;
  bool interior_ok = true;
  long long evaluated = 0;

#pragma omp parallel
  {
    double lmax = -1e300;
    int lq = 0, lell = 0;
    double lberr = 0.0;
    bool linterior = true;
    long long lcount = 0;
#pragma omp for schedule(static) nowait
    for (int q = 1; q <= q_max; ++q) {
      const double edge = std::max(transition_factor(q, 1), transition_factor(q, q + 1));
      for (int ell = 1; ell <= q + 1; ++ell) {
        const double v = transition_factor(q, ell);
        ++lcount;
        if (v > lmax || (v == lmax && (q < lq || (q == lq && ell < lell)))) {
          lmax = v;
          lq = q;
          lell = ell;
        }
        if (ell > 1 && ell < q + 1 && v > edge + kSlack) linterior = false;
      }
      lberr = std::max(lberr, std::abs(transition_factor(q, 1) - 1.0));
    }
#pragma omp critical
    {
      if (lmax > max_factor ||
          (lmax == max_factor && (lq < argmax_q || (lq == argmax_q && lell < argmax_ell)))) {
        max_factor = lmax;
        argmax_q = lq;
        argmax_ell = lell;
      }
      boundary_err = std::max(boundary_err, lberr);
      interior_ok = interior_ok && linterior;
      evaluated += lcount;
    }
  }

  rep.max_factor = max_factor;
  rep.argmax_q = argmax_q;
  rep.argmax_ell = argmax_ell;
  rep.boundary_max_error = boundary_err;
  rep.interior_below_edges = interior_ok;
  rep.evaluated = evaluated;
  rep.pass = max_factor <= 1.0 + kSlack && boundary_err <= kSlack && interior_ok;
  return rep;
}

}  // namespace starsearch
