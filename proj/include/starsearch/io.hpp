#pragma once

#include <json.hpp>

#include <string>

#include "starsearch/analysis.hpp"
#include "starsearch/offline.hpp"
#include "starsearch/partialinfo.hpp"
#include "starsearch/types.hpp"

namespace starsearch {

using json = nlohmann::json;

// Weighted instance: {"m": int, "W": number, "targets": [{"ray", "d", "w"}]},
// absent rays omitted.
json instance_to_json(const Instance& instance);
Instance instance_from_json(const json& j);

// Subset instance: {"m": int, "S": [int], "targets": [{"ray", "d"}]}.
json subset_to_json(const SubsetInstance& instance);
SubsetInstance subset_from_json(const json& j);

inline bool json_is_subset_instance(const json& j) { return j.contains("S"); }

// Trace export: excursion list plus totals. The unbounded final sweep is
// exported with "depth": null.
json trace_to_json(const Trace& trace);

// Partial-information multiset: {"W": number, "pairs": [[d, w], ...]}.
json multiset_to_json(const PartialMultiset& lambda);
PartialMultiset multiset_from_json(const json& j);

json summary_to_json(const OfflineSummary& summary, int ray_count);
json phi_gap_report_to_json(const PhiGapReport& report);
json h_bound_report_to_json(const HBoundReport& report);

json load_json(const std::string& path);
void save_json(const std::string& path, const json& j);

// Shortest-exact decimal form, used for byte-stable CSV output.
std::string format_double(double value);

}  // namespace starsearch
