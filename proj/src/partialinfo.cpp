#include "starsearch/partialinfo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "starsearch/analysis.hpp"

namespace starsearch {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool pair_less(const Target& a, const Target& b) {
  return a.distance < b.distance || (a.distance == b.distance && a.weight < b.weight);
}

}  // namespace

PartialMultiset::PartialMultiset(std::vector<Target> pairs, double goal)
    : pairs_(std::move(pairs)), goal_(goal) {
  if (pairs_.empty()) throw std::invalid_argument("multiset needs at least one pair");
  if (!(goal >= 0.0)) throw std::invalid_argument("weight goal must be nonnegative");
  double total = 0.0;
  for (const Target& t : pairs_) {
    if (!(t.distance >= 1.0)) throw std::invalid_argument("distances must be at least 1");
    if (!(t.weight >= 0.0)) throw std::invalid_argument("weights must be nonnegative");
    total += t.weight;
  }
  if (total < goal) {
    throw feasibility_error("multiset carries less weight than the goal");
  }
  std::sort(pairs_.begin(), pairs_.end(), pair_less);
}

std::vector<Instance> presentations(const PartialMultiset& lambda) {
  if (lambda.ray_count() > kMaxPresentationRays) {
    throw capacity_error("presentation enumeration is limited to " +
                         std::to_string(kMaxPresentationRays) + " rays");
  }
  std::vector<Target> pairs = lambda.pairs();  // sorted; next_permutation walks
                                               // distinct orderings exactly once
  std::vector<Instance> out;
  do {
    Instance inst(lambda.ray_count(), lambda.goal());
    for (int ray = 0; ray < lambda.ray_count(); ++ray) {
      const Target& t = pairs[static_cast<std::size_t>(ray)];
      inst.set_target(ray, t.distance, t.weight);
    }
    out.push_back(std::move(inst));
  } while (std::next_permutation(pairs.begin(), pairs.end(), pair_less));
  return out;
}

namespace {

// Exact minimax search. Rays are interchangeable, so a state is the multiset
// of per-ray exploration depths (as indices into the distinct distances, 0
// meaning unexplored) plus the multiset of pairs not yet located. The goal
// gap is implied by the remaining pairs. The adversary answers each probe
// with any outcome extendable to a full presentation: a miss pins the ray's
// pair above the probed depth and a hit hands over a remaining pair within
// it. Feasibility of an answer is a bipartite matching question between
// uncleared rays and remaining pairs, checked greedily on sorted lists.
class IntrinsicSolver {
 public:
  explicit IntrinsicSolver(const PartialMultiset& lambda)
      : pairs_(lambda.pairs()), goal_(lambda.goal()) {
    for (const Target& t : pairs_) {
      if (distances_.empty() || distances_.back() != t.distance) {
        distances_.push_back(t.distance);
      }
      total_weight_ += t.weight;
    }
  }

  double solve() {
    if (goal_ <= 0.0) return 0.0;
    std::vector<int> lbs(pairs_.size(), 0);
    std::vector<int> remaining(pairs_.size());
    for (std::size_t i = 0; i < pairs_.size(); ++i) remaining[i] = static_cast<int>(i);
    return value(lbs, remaining);
  }

 private:
  double depth_of(int lb_index) const {
    return lb_index == 0 ? 0.0 : distances_[static_cast<std::size_t>(lb_index - 1)];
  }

  int index_of_distance(double d) const {
    return static_cast<int>(std::lower_bound(distances_.begin(), distances_.end(), d) -
                            distances_.begin()) +
           1;
  }

  // lbs and remaining both ascending; a perfect assignment with every pair
  // strictly beyond its ray's explored depth exists iff it exists greedily.
  bool matchable(const std::vector<int>& lbs, const std::vector<int>& remaining) const {
    for (std::size_t i = 0; i < lbs.size(); ++i) {
      if (!(pairs_[static_cast<std::size_t>(remaining[i])].distance > depth_of(lbs[i]))) {
        return false;
      }
    }
    return true;
  }

  double needed(const std::vector<int>& remaining) const {
    double rem_weight = 0.0;
    for (int idx : remaining) rem_weight += pairs_[static_cast<std::size_t>(idx)].weight;
    return goal_ - (total_weight_ - rem_weight);
  }

  double value(const std::vector<int>& lbs, const std::vector<int>& remaining) {
    std::vector<int> key = lbs;
    key.push_back(-1);
    key.insert(key.end(), remaining.begin(), remaining.end());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const double gap = needed(remaining);
    double best = kInf;

    for (std::size_t rpos = 0; rpos < lbs.size(); ++rpos) {
      if (rpos > 0 && lbs[rpos] == lbs[rpos - 1]) continue;  // symmetric ray
      const double floor_depth = depth_of(lbs[rpos]);

      // candidate depths: distances of remaining pairs beyond the floor
      int prev_depth_index = -1;
      for (int ridx : remaining) {
        const double d = pairs_[static_cast<std::size_t>(ridx)].distance;
        if (!(d > floor_depth)) continue;
        const int depth_index = index_of_distance(d);
        if (depth_index == prev_depth_index) continue;
        prev_depth_index = depth_index;
        const double depth = depth_of(depth_index);

        double worst = -kInf;

        // adversary answers "nothing within reach"
        {
          std::vector<int> lbs2 = lbs;
          lbs2[rpos] = depth_index;
          std::sort(lbs2.begin(), lbs2.end());
          if (matchable(lbs2, remaining)) {
            worst = std::max(worst, 2.0 * depth + value(lbs2, remaining));
          }
        }

        // adversary hands over one of the remaining pairs within reach
        std::vector<int> lbs2(lbs);
        lbs2.erase(lbs2.begin() + static_cast<std::ptrdiff_t>(rpos));
        for (std::size_t k = 0; k < remaining.size(); ++k) {
          const Target& pair = pairs_[static_cast<std::size_t>(remaining[k])];
          if (!(pair.distance > floor_depth) || !(pair.distance <= depth)) continue;
          if (k > 0 && pairs_[static_cast<std::size_t>(remaining[k - 1])] == pair) {
            continue;  // identical pair type
          }
          std::vector<int> rem2 = remaining;
          rem2.erase(rem2.begin() + static_cast<std::ptrdiff_t>(k));
          if (!matchable(lbs2, rem2)) continue;
          if (pair.weight >= gap) {
            worst = std::max(worst, pair.distance);  // terminal, no return
          } else {
            worst = std::max(worst, 2.0 * pair.distance + value(lbs2, rem2));
          }
        }

        best = std::min(best, worst);
      }
    }

    memo_.emplace(std::move(key), best);
    return best;
  }

  std::vector<Target> pairs_;      // ascending (distance, weight)
  std::vector<double> distances_;  // distinct, ascending
  double total_weight_ = 0.0;
  double goal_;
  std::map<std::vector<int>, double> memo_;
};

}  // namespace

double intrinsic_cost(const PartialMultiset& lambda) {
  if (lambda.ray_count() > kMaxIntrinsicRays) {
    throw capacity_error("the minimax oracle is limited to " +
                         std::to_string(kMaxIntrinsicRays) + " rays");
  }
  return IntrinsicSolver(lambda).solve();
}

Instance SignedInstance::to_instance() const {
  Instance inst(ray_count(), 1.0);
  for (int ray = 0; ray < ray_count(); ++ray) {
    const Target& t = targets[static_cast<std::size_t>(ray)];
    inst.set_target(ray, t.distance, t.weight);
  }
  return inst;
}

PartialMultiset SignedInstance::to_multiset() const {
  return PartialMultiset(targets, 1.0);
}

std::pair<Instance, SignedInstance> reduce_ws_instance(const Instance& instance,
                                                       const std::vector<int>& found_rays) {
  const int m = instance.ray_count();
  for (int ray = 0; ray < m; ++ray) {
    if (!instance.has_target(ray)) {
      throw std::invalid_argument("the reduction needs a target on every ray");
    }
  }
  std::vector<bool> found(static_cast<std::size_t>(m), false);
  for (int ray : found_rays) {
    if (ray < 0 || ray >= m) throw std::invalid_argument("found ray out of range");
    found[static_cast<std::size_t>(ray)] = true;
  }
  if (static_cast<int>(found_rays.size()) >= m) {
    throw std::invalid_argument("at least one target must remain unfound");
  }

  Instance weighted(m, instance.goal());
  SignedInstance is_signed;
  is_signed.targets.resize(static_cast<std::size_t>(m));
  for (int ray = 0; ray < m; ++ray) {
    const Target& t = *instance.target(ray);
    const bool in_found = found[static_cast<std::size_t>(ray)];
    weighted.set_target(ray, t.distance, in_found ? 0.0 : instance.goal());
    is_signed.targets[static_cast<std::size_t>(ray)] =
        Target{t.distance, in_found ? 0.0 : 1.0};
  }
  return {std::move(weighted), std::move(is_signed)};
}

namespace {

// ws_from_signed wrapper: the inner signed strategy is shown every find as a
// weightless target; the engine's weighted goal still ends the run.
class SignedAdapter : public Strategy {
 public:
  explicit SignedAdapter(std::unique_ptr<Strategy> inner) : inner_(std::move(inner)) {}

  Probe next(const std::optional<Feedback>& last) override {
    if (last && last->found) {
      Feedback masked = *last;
      masked.weight = 0.0;
      return inner_->next(masked);
    }
    return inner_->next(last);
  }

 private:
  std::unique_ptr<Strategy> inner_;
};

class SignedBaselineStrategy : public Strategy {
 public:
  explicit SignedBaselineStrategy(int ray_count) : ray_count_(ray_count) {
    if (ray_count < 1) throw std::invalid_argument("ray count must be positive");
    live_.resize(static_cast<std::size_t>(ray_count));
    for (int i = 0; i < ray_count; ++i) live_[static_cast<std::size_t>(i)] = i;
  }

  Probe next(const std::optional<Feedback>& last) override {
    if (live_.empty()) throw exhaustion_error("all rays cleared");
    if (last) {
      if (last->found) {
        live_.erase(live_.begin() + pos_);
        if (live_.empty()) throw exhaustion_error("all rays cleared");
        pos_ %= static_cast<int>(live_.size());
      } else {
        pos_ = (pos_ + 1) % static_cast<int>(live_.size());
      }
    }
    ++step_;
    if (live_.size() == 1) {
      return {live_[0], std::numeric_limits<double>::infinity()};
    }
    return {live_[static_cast<std::size_t>(pos_)],
            std::pow(growth_base_mt(ray_count_, 1), static_cast<double>(step_))};
  }

 private:
  int ray_count_;
  std::vector<int> live_;
  int pos_ = 0;
  long step_ = 0;
};

}  // namespace

std::unique_ptr<Strategy> ws_from_signed(std::unique_ptr<Strategy> inner) {
  return std::make_unique<SignedAdapter>(std::move(inner));
}

std::unique_ptr<Strategy> signed_baseline(int ray_count) {
  return std::make_unique<SignedBaselineStrategy>(ray_count);
}

}  // namespace starsearch
