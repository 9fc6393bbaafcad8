#include "starsearch/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace starsearch {

json instance_to_json(const Instance& instance) {
  json targets = json::array();
  for (int ray = 0; ray < instance.ray_count(); ++ray) {
    const auto& t = instance.target(ray);
    if (!t) continue;
    targets.push_back({{"ray", ray}, {"d", t->distance}, {"w", t->weight}});
  }
  return {{"m", instance.ray_count()}, {"W", instance.goal()}, {"targets", targets}};
}

Instance instance_from_json(const json& j) {
  Instance inst(j.at("m").get<int>(), j.at("W").get<double>());
  for (const auto& t : j.at("targets")) {
    inst.set_target(t.at("ray").get<int>(), t.at("d").get<double>(),
                    t.at("w").get<double>());
  }
  return inst;
}

json subset_to_json(const SubsetInstance& instance) {
  json targets = json::array();
  for (int ray = 0; ray < instance.ray_count(); ++ray) {
    const auto& d = instance.distance(ray);
    if (!d) continue;
    targets.push_back({{"ray", ray}, {"d", *d}});
  }
  return {{"m", instance.ray_count()}, {"S", instance.subset()}, {"targets", targets}};
}

SubsetInstance subset_from_json(const json& j) {
  SubsetInstance inst(j.at("m").get<int>());
  for (const auto& t : j.at("targets")) {
    inst.set_distance(t.at("ray").get<int>(), t.at("d").get<double>());
  }
  inst.set_subset(j.at("S").get<std::vector<int>>());
  inst.validate();
  return inst;
}

json trace_to_json(const Trace& trace) {
  json excursions = json::array();
  for (const Excursion& e : trace.excursions) {
    json row = {{"ray", e.ray},
                {"depth", std::isinf(e.planned_depth) ? json() : json(e.planned_depth)},
                {"found", e.found},
                {"cost", e.cost}};
    if (e.found) {
      row["d"] = e.distance;
      row["w"] = e.weight;
    }
    excursions.push_back(std::move(row));
  }
  json found = json::array();
  for (const auto& [ray, t] : trace.found) {
    found.push_back({{"ray", ray}, {"d", t.distance}, {"w", t.weight}});
  }
  return {{"excursions", excursions},
          {"total_cost", trace.total_cost},
          {"found", found}};
}

json multiset_to_json(const PartialMultiset& lambda) {
  json pairs = json::array();
  for (const Target& t : lambda.pairs()) {
    pairs.push_back({t.distance, t.weight});
  }
  return {{"W", lambda.goal()}, {"pairs", pairs}};
}

PartialMultiset multiset_from_json(const json& j) {
  std::vector<Target> pairs;
  for (const auto& p : j.at("pairs")) {
    pairs.push_back(Target{p.at(0).get<double>(), p.at(1).get<double>()});
  }
  return PartialMultiset(std::move(pairs), j.at("W").get<double>());
}

json summary_to_json(const OfflineSummary& summary, int ray_count) {
  json subsets = json::array();
  for (std::uint32_t mask : summary.optimal_subsets) {
    json rays = json::array();
    for (int ray = 0; ray < ray_count; ++ray) {
      if (mask & (1u << ray)) rays.push_back(ray);
    }
    subsets.push_back(std::move(rays));
  }
  return {{"opt", summary.opt},
          {"s_I", summary.s},
          {"xi", std::isnan(summary.xi) ? json() : json(summary.xi)},
          {"optimal_subsets", subsets}};
}

json phi_gap_report_to_json(const PhiGapReport& report) {
  return {{"pass", report.pass},
          {"q_max", report.q_max},
          {"min_gap", report.min_gap},
          {"min_gap_q", report.min_gap_q},
          {"min_slack", report.min_slack},
          {"tail_half_gap", report.tail_half_gap},
          {"phi_monotone", report.phi_monotone},
          {"half_gap_decreasing", report.half_gap_decreasing}};
}

json h_bound_report_to_json(const HBoundReport& report) {
  return {{"pass", report.pass},
          {"q_max", report.q_max},
          {"evaluated", report.evaluated},
          {"max_factor", report.max_factor},
          {"argmax_q", report.argmax_q},
          {"argmax_ell", report.argmax_ell},
          {"boundary_max_error", report.boundary_max_error},
          {"interior_below_edges", report.interior_below_edges}};
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void save_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

}  // namespace starsearch
