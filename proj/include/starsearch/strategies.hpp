#pragma once

#include <memory>
#include <string>
#include <vector>

#include "starsearch/engine.hpp"
#include "starsearch/types.hpp"

namespace starsearch {

enum class StrategyKind {
  AdaptiveSubset,    // "adsub": adaptive growth base, subset-search form
  AdaptiveWeighted,  // "adsch": the same strategy under the weighted goal
  FixedBaseCyclic,   // "fixed:B": cyclic with constant base B > 1
  NaiveAdaptive,     // "naive": base follows finds but the exponent keeps its
                     // global step count; unbounded competitive ratio
  ClassicSingle,     // "classic": cyclic with base b_{m,1}
  MultiTargetKnownT  // "multi:T": cyclic with base b_{m,T}
};

struct StrategySpec {
  StrategyKind kind = StrategyKind::AdaptiveSubset;
  double base = 0.0;  // FixedBaseCyclic
  int t = 0;          // MultiTargetKnownT

  static StrategySpec parse(const std::string& text);
  std::string to_string() const;
};

std::unique_ptr<Strategy> make_strategy(const StrategySpec& spec, int ray_count);

Trace run_strategy(const StrategySpec& spec, const Instance& instance);
Trace run_strategy(const StrategySpec& spec, const SubsetInstance& instance);

// The weighted wrapper: runs the adaptive strategy until the cumulative
// discovered weight reaches the instance goal.
Trace adsch(const Instance& instance);

// The adaptive strategy. Cycles over live rays; every planned depth is the
// last unsuccessful depth times b_{m,f}, where f-1 rays have been cleared.
// A find removes the ray, preserving cyclic order, and leaves the depth
// scale unchanged. With one live ray left the proposal is an unbounded sweep.
class AdaptiveStrategy : public Strategy {
 public:
  explicit AdaptiveStrategy(int ray_count);  // requires ray_count >= 2

  Probe next(const std::optional<Feedback>& last) override;

  int phase() const noexcept { return ray_count_ - static_cast<int>(live_.size()) + 1; }
  double depth_scale() const noexcept { return scale_; }
  const std::vector<int>& live_rays() const noexcept { return live_; }

 private:
  int ray_count_;
  std::vector<int> live_;
  int pos_ = 0;
  double scale_ = 1.0;  // last unsuccessful planned depth (1 before any miss)
};

// Cyclic strategy with a constant base: step i targets ray i-1 (mod m) at
// depth base^i. Steps whose ray is already cleared are skipped without
// spending an excursion, so the exponent schedule is unaffected by finds.
class FixedBaseCyclicStrategy : public Strategy {
 public:
  FixedBaseCyclicStrategy(int ray_count, double base);  // base > 1

  Probe next(const std::optional<Feedback>& last) override;

 private:
  int ray_count_;
  double base_;
  std::vector<bool> cleared_;
  int cleared_count_ = 0;
  long step_ = 0;
  double depth_ = 1.0;
};

// The intuitive-but-bad adaptive variant: step i targets the next live ray
// at depth b_{m,t}^i where t-1 targets were found by the start of the step.
// The global exponent makes the depth jump multiplicatively at every find.
class NaiveAdaptiveStrategy : public Strategy {
 public:
  explicit NaiveAdaptiveStrategy(int ray_count);

  Probe next(const std::optional<Feedback>& last) override;

 private:
  int ray_count_;
  std::vector<int> live_;
  int pos_ = 0;
  long step_ = 0;
};

// Known-t search: cyclic over live rays with the fixed base b_{m,t} and a
// global step exponent. For t = m every probe is an unbounded per-ray sweep.
class MultiTargetStrategy : public Strategy {
 public:
  MultiTargetStrategy(int ray_count, int t);  // 1 <= t <= m

  Probe next(const std::optional<Feedback>& last) override;

 private:
  int ray_count_;
  int t_;
  std::vector<int> live_;
  int pos_ = 0;
  long step_ = 0;
};

// Sweeps the only ray of a one-ray star.
class SingleRaySweepStrategy : public Strategy {
 public:
  Probe next(const std::optional<Feedback>& last) override;

 private:
  bool spent_ = false;
};

}  // namespace starsearch
