#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace starsearch {

// Error taxonomy. All library errors derive from std::runtime_error so the
// CLI can report them uniformly; parameter misuse throws std::invalid_argument.
struct feasibility_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct protocol_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct exhaustion_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct capacity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct shape_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct generation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct degenerate_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A hidden point on a ray. Distances are at least one unit from the origin,
// weights are nonnegative.
struct Target {
  double distance = 1.0;
  double weight = 0.0;

  bool operator==(const Target&) const = default;
};

// A weighted search instance: m rays, an optional target per ray (a missing
// entry models a ray with no reachable target), and a weight goal. Feasible
// instances carry enough weight to meet the goal.
class Instance {
 public:
  Instance(int ray_count, double goal);

  void set_target(int ray, double distance, double weight);
  void clear_target(int ray);

  int ray_count() const noexcept { return static_cast<int>(targets_.size()); }
  double goal() const noexcept { return goal_; }
  const std::optional<Target>& target(int ray) const;
  bool has_target(int ray) const { return target(ray).has_value(); }

  double total_weight() const noexcept;
  int target_count() const noexcept;

  bool feasible() const noexcept { return total_weight() >= goal_; }
  void require_feasible() const;

  bool operator==(const Instance&) const = default;

 private:
  std::vector<std::optional<Target>> targets_;
  double goal_;
};

// An unweighted instance for subset search: per-ray optional distances and a
// nonempty goal set S of rays, each of which must hold a target.
class SubsetInstance {
 public:
  explicit SubsetInstance(int ray_count);

  void set_distance(int ray, double distance);
  void set_subset(std::vector<int> rays);  // deduplicated and sorted

  int ray_count() const noexcept { return static_cast<int>(distances_.size()); }
  const std::optional<double>& distance(int ray) const;
  const std::vector<int>& subset() const noexcept { return subset_; }

  void validate() const;  // S nonempty, members carry targets

  bool operator==(const SubsetInstance&) const = default;

 private:
  std::vector<std::optional<double>> distances_;
  std::vector<int> subset_;
};

// One trip down a ray. planned_depth is +infinity for the final unbounded
// sweep of a single remaining ray. Cost convention: 2*planned_depth on a
// miss, 2*distance on a non-terminal find, distance on the terminal find
// (the searcher does not return to the origin after meeting the goal).
struct Excursion {
  int ray = 0;
  double planned_depth = 0.0;
  bool found = false;
  double distance = 0.0;
  double weight = 0.0;
  double cost = 0.0;

  bool operator==(const Excursion&) const = default;
};

struct Trace {
  std::vector<Excursion> excursions;
  double total_cost = 0.0;
  std::vector<std::pair<int, Target>> found;  // discovery order

  bool operator==(const Trace&) const = default;
};

}  // namespace starsearch
