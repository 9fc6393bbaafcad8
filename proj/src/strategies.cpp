#include "starsearch/strategies.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "starsearch/analysis.hpp"

namespace starsearch {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_echo(const std::optional<Feedback>& last, int expected_ray) {
  if (last && last->ray != expected_ray) {
    throw protocol_error("feedback does not match the last proposed ray");
  }
}

}  // namespace

AdaptiveStrategy::AdaptiveStrategy(int ray_count) : ray_count_(ray_count) {
  if (ray_count < 2) {
    throw std::invalid_argument("adaptive strategy requires at least 2 rays");
  }
  live_.resize(static_cast<std::size_t>(ray_count));
  for (int i = 0; i < ray_count; ++i) live_[static_cast<std::size_t>(i)] = i;
}

Probe AdaptiveStrategy::next(const std::optional<Feedback>& last) {
  if (live_.empty()) throw exhaustion_error("all rays cleared");
  if (last) {
    check_echo(last, live_[static_cast<std::size_t>(pos_)]);
    if (last->found) {
      live_.erase(live_.begin() + pos_);
      if (live_.empty()) throw exhaustion_error("all rays cleared");
      pos_ %= static_cast<int>(live_.size());
      // scale_ keeps the last unsuccessful depth across the phase boundary
    } else {
      scale_ *= growth_base_mt(ray_count_, phase());
      pos_ = (pos_ + 1) % static_cast<int>(live_.size());
    }
  }
  if (live_.size() == 1) {
    // single-ray regime: walk the remaining ray until its target appears
    return {live_[0], kInf};
  }
  return {live_[static_cast<std::size_t>(pos_)],
          scale_ * growth_base_mt(ray_count_, phase())};
}

FixedBaseCyclicStrategy::FixedBaseCyclicStrategy(int ray_count, double base)
    : ray_count_(ray_count), base_(base) {
  if (ray_count < 1) throw std::invalid_argument("ray count must be positive");
  if (!(base > 1.0)) throw std::invalid_argument("cyclic base must exceed 1");
  cleared_.resize(static_cast<std::size_t>(ray_count), false);
}

Probe FixedBaseCyclicStrategy::next(const std::optional<Feedback>& last) {
  if (last && last->found) {
    cleared_[static_cast<std::size_t>(last->ray)] = true;
    ++cleared_count_;
  }
  if (cleared_count_ == ray_count_) throw exhaustion_error("all rays cleared");
  do {
    ++step_;
    depth_ *= base_;
  } while (cleared_[static_cast<std::size_t>((step_ - 1) % ray_count_)]);
  return {static_cast<int>((step_ - 1) % ray_count_), depth_};
}

NaiveAdaptiveStrategy::NaiveAdaptiveStrategy(int ray_count) : ray_count_(ray_count) {
  if (ray_count < 2) {
    throw std::invalid_argument("naive adaptive strategy requires at least 2 rays");
  }
  live_.resize(static_cast<std::size_t>(ray_count));
  for (int i = 0; i < ray_count; ++i) live_[static_cast<std::size_t>(i)] = i;
}

Probe NaiveAdaptiveStrategy::next(const std::optional<Feedback>& last) {
  if (live_.empty()) throw exhaustion_error("all rays cleared");
  if (last) {
    check_echo(last, live_[static_cast<std::size_t>(pos_)]);
    if (last->found) {
      live_.erase(live_.begin() + pos_);
      if (live_.empty()) throw exhaustion_error("all rays cleared");
      pos_ %= static_cast<int>(live_.size());
    } else {
      pos_ = (pos_ + 1) % static_cast<int>(live_.size());
    }
  }
  ++step_;
  if (live_.size() == 1) return {live_[0], kInf};
  const int t = ray_count_ - static_cast<int>(live_.size()) + 1;
  // the global step exponent is what breaks this strategy: the depth jumps
  // by (b_{m,t+1}/b_{m,t})^step at every find
  return {live_[static_cast<std::size_t>(pos_)],
          std::pow(growth_base_mt(ray_count_, t), static_cast<double>(step_))};
}

MultiTargetStrategy::MultiTargetStrategy(int ray_count, int t)
    : ray_count_(ray_count), t_(t) {
  if (ray_count < 1) throw std::invalid_argument("ray count must be positive");
  if (t < 1 || t > ray_count) {
    throw std::invalid_argument("known target count must be in [1, m]");
  }
  live_.resize(static_cast<std::size_t>(ray_count));
  for (int i = 0; i < ray_count; ++i) live_[static_cast<std::size_t>(i)] = i;
}

Probe MultiTargetStrategy::next(const std::optional<Feedback>& last) {
  if (live_.empty()) throw exhaustion_error("all rays cleared");
  if (last) {
    check_echo(last, live_[static_cast<std::size_t>(pos_)]);
    if (last->found) {
      live_.erase(live_.begin() + pos_);
      if (live_.empty()) throw exhaustion_error("all rays cleared");
      pos_ %= static_cast<int>(live_.size());
    } else {
      pos_ = (pos_ + 1) % static_cast<int>(live_.size());
    }
  }
  ++step_;
  if (t_ == ray_count_ || live_.size() == 1) {
    // seeking every target: sweep the rays one by one
    return {live_[static_cast<std::size_t>(pos_)], kInf};
  }
  return {live_[static_cast<std::size_t>(pos_)],
          std::pow(growth_base_mt(ray_count_, t_), static_cast<double>(step_))};
}

Probe SingleRaySweepStrategy::next(const std::optional<Feedback>&) {
  if (spent_) throw exhaustion_error("all rays cleared");
  spent_ = true;
  return {0, kInf};
}

StrategySpec StrategySpec::parse(const std::string& text) {
  StrategySpec spec;
  if (text == "adsub") {
    spec.kind = StrategyKind::AdaptiveSubset;
  } else if (text == "adsch") {
    spec.kind = StrategyKind::AdaptiveWeighted;
  } else if (text == "naive") {
    spec.kind = StrategyKind::NaiveAdaptive;
  } else if (text == "classic") {
    spec.kind = StrategyKind::ClassicSingle;
  } else if (text.rfind("fixed:", 0) == 0) {
    spec.kind = StrategyKind::FixedBaseCyclic;
    spec.base = std::stod(text.substr(6));
    if (!(spec.base > 1.0)) throw std::invalid_argument("cyclic base must exceed 1");
  } else if (text.rfind("multi:", 0) == 0) {
    spec.kind = StrategyKind::MultiTargetKnownT;
    spec.t = std::stoi(text.substr(6));
    if (spec.t < 1) throw std::invalid_argument("known target count must be positive");
  } else {
    throw std::invalid_argument("unknown strategy '" + text +
                                "' (expected adsub, adsch, fixed:B, naive, classic, multi:T)");
  }
  return spec;
}

std::string StrategySpec::to_string() const {
  switch (kind) {
    case StrategyKind::AdaptiveSubset:
      return "adsub";
    case StrategyKind::AdaptiveWeighted:
      return "adsch";
    case StrategyKind::FixedBaseCyclic:
      return "fixed:" + std::to_string(base);
    case StrategyKind::NaiveAdaptive:
      return "naive";
    case StrategyKind::ClassicSingle:
      return "classic";
    case StrategyKind::MultiTargetKnownT:
      return "multi:" + std::to_string(t);
  }
  return "?";
}

std::unique_ptr<Strategy> make_strategy(const StrategySpec& spec, int ray_count) {
  switch (spec.kind) {
    case StrategyKind::AdaptiveSubset:
    case StrategyKind::AdaptiveWeighted:
      return std::make_unique<AdaptiveStrategy>(ray_count);
    case StrategyKind::FixedBaseCyclic:
      return std::make_unique<FixedBaseCyclicStrategy>(ray_count, spec.base);
    case StrategyKind::NaiveAdaptive:
      return std::make_unique<NaiveAdaptiveStrategy>(ray_count);
    case StrategyKind::ClassicSingle:
      if (ray_count == 1) return std::make_unique<SingleRaySweepStrategy>();
      return std::make_unique<FixedBaseCyclicStrategy>(ray_count,
                                                       growth_base_mt(ray_count, 1));
    case StrategyKind::MultiTargetKnownT:
      return std::make_unique<MultiTargetStrategy>(ray_count, spec.t);
  }
  throw std::invalid_argument("unknown strategy kind");
}

Trace run_strategy(const StrategySpec& spec, const Instance& instance) {
  auto strategy = make_strategy(spec, instance.ray_count());
  return simulate(*strategy, instance);
}

Trace run_strategy(const StrategySpec& spec, const SubsetInstance& instance) {
  auto strategy = make_strategy(spec, instance.ray_count());
  return simulate_subset(*strategy, instance);
}

Trace adsch(const Instance& instance) {
  return run_strategy({StrategyKind::AdaptiveWeighted}, instance);
}

}  // namespace starsearch
