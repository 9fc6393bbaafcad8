#include "starsearch/types.hpp"

#include <algorithm>

namespace starsearch {

namespace {

void check_ray(int ray, int ray_count) {
  if (ray < 0 || ray >= ray_count) {
    throw std::invalid_argument("ray index " + std::to_string(ray) +
                                " out of range [0, " + std::to_string(ray_count) + ")");
  }
}

void check_distance(double distance) {
  if (!(distance >= 1.0)) {
    throw std::invalid_argument("target distance must be at least 1");
  }
}

}  // namespace

Instance::Instance(int ray_count, double goal) : targets_(), goal_(goal) {
  if (ray_count < 1) throw std::invalid_argument("instance needs at least one ray");
  if (!(goal >= 0.0)) throw std::invalid_argument("weight goal must be nonnegative");
  targets_.resize(static_cast<std::size_t>(ray_count));
}

void Instance::set_target(int ray, double distance, double weight) {
  check_ray(ray, ray_count());
  check_distance(distance);
  if (!(weight >= 0.0)) throw std::invalid_argument("target weight must be nonnegative");
  targets_[static_cast<std::size_t>(ray)] = Target{distance, weight};
}

void Instance::clear_target(int ray) {
  check_ray(ray, ray_count());
  targets_[static_cast<std::size_t>(ray)].reset();
}

const std::optional<Target>& Instance::target(int ray) const {
  check_ray(ray, ray_count());
  return targets_[static_cast<std::size_t>(ray)];
}

double Instance::total_weight() const noexcept {
  double sum = 0.0;
  for (const auto& t : targets_) {
    if (t) sum += t->weight;
  }
  return sum;
}

int Instance::target_count() const noexcept {
  int n = 0;
  for (const auto& t : targets_) {
    if (t) ++n;
  }
  return n;
}

void Instance::require_feasible() const {
  if (!feasible()) {
    throw feasibility_error("instance is infeasible: present targets carry less weight than the goal");
  }
}

SubsetInstance::SubsetInstance(int ray_count) {
  if (ray_count < 1) throw std::invalid_argument("instance needs at least one ray");
  distances_.resize(static_cast<std::size_t>(ray_count));
}

void SubsetInstance::set_distance(int ray, double distance) {
  check_ray(ray, ray_count());
  check_distance(distance);
  distances_[static_cast<std::size_t>(ray)] = distance;
}

void SubsetInstance::set_subset(std::vector<int> rays) {
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  for (int ray : rays) check_ray(ray, ray_count());
  subset_ = std::move(rays);
}

const std::optional<double>& SubsetInstance::distance(int ray) const {
  check_ray(ray, ray_count());
  return distances_[static_cast<std::size_t>(ray)];
}

void SubsetInstance::validate() const {
  if (subset_.empty()) throw std::invalid_argument("goal set S must be nonempty");
  for (int ray : subset_) {
    if (!distances_[static_cast<std::size_t>(ray)]) {
      throw std::invalid_argument("goal set member " + std::to_string(ray) +
                                  " has no target");
    }
  }
}

}  // namespace starsearch
