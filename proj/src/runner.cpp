#include "starsearch/runner.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <ostream>
#include <sstream>

#include "starsearch/adversary.hpp"
#include "starsearch/analysis.hpp"
#include "starsearch/io.hpp"
#include "starsearch/offline.hpp"

namespace starsearch {

const char* const kCsvHeader = "id,m,W,s_I,opt,xi,cost,ratio,bound,pass";

namespace {

constexpr double kBoundSlack = 1e-9;

bool theorem_backed(const StrategySpec& spec) {
  return spec.kind == StrategyKind::AdaptiveSubset ||
         spec.kind == StrategyKind::AdaptiveWeighted;
}

ResultRow weighted_row(long id, const StrategySpec& spec, const Instance& instance) {
  ResultRow row;
  row.id = id;
  row.m = instance.ray_count();
  row.goal = instance.goal();
  const OfflineSummary summary = analyze_instance(instance);
  row.s = summary.s;
  row.opt = summary.opt;
  row.xi = summary.xi;
  row.cost = run_strategy(spec, instance).total_cost;
  row.ratio = row.cost / summary.opt;
  row.bound = ratio_guarantee(row.m, summary.s);
  row.within = row.ratio <= std::min(row.bound, summary.xi_guarantee) + kBoundSlack;
  row.checked = theorem_backed(spec);
  return row;
}

ResultRow subset_row(long id, const StrategySpec& spec, const SubsetInstance& instance) {
  ResultRow row;
  row.id = id;
  row.m = instance.ray_count();
  const int size = static_cast<int>(instance.subset().size());
  row.goal = static_cast<double>(size);
  row.s = size;
  row.opt = subset_cost(instance);
  row.xi = std::numeric_limits<double>::quiet_NaN();
  row.cost = run_strategy(spec, instance).total_cost;
  row.ratio = row.cost / row.opt;
  row.bound = ratio_guarantee(row.m, size);
  row.within = row.ratio <= row.bound + kBoundSlack;
  row.checked = theorem_backed(spec);
  return row;
}

Instance family_instance(const ExperimentConfig& config, int index) {
  if (config.family == "single") {
    return gen_single_target(config.ray_count, index, config.epsilon);
  }
  if (config.family == "subsets") {
    return gen_subsets_lb(config.ray_count, config.s, index, config.epsilon);
  }
  if (config.family == "weights") {
    return gen_weights_lb(config.ray_count, config.t_real, index, config.epsilon);
  }
  if (config.family == "all-targets") {
    return gen_all_targets(StrategySpec::parse(config.family_strategy), config.ray_count,
                           index, config.epsilon);
  }
  throw std::invalid_argument("unknown adversary family '" + config.family + "'");
}

}  // namespace

RunReport run_experiment(const ExperimentConfig& config) {
  const StrategySpec spec = StrategySpec::parse(config.strategy);
  RunReport report;

  switch (config.source) {
    case SweepSource::RandomWeighted: {
      const auto instances =
          random_instances(config.seed, config.ray_count, config.count, config.dist_min,
                           config.dist_max, config.w_min, config.w_max, config.w_rule);
      report.rows.resize(instances.size());
#pragma omp parallel for schedule(static)
      for (long i = 0; i < static_cast<long>(instances.size()); ++i) {
        report.rows[static_cast<std::size_t>(i)] =
            weighted_row(i, spec, instances[static_cast<std::size_t>(i)]);
      }
      break;
    }
    case SweepSource::RandomSubset: {
      const auto instances =
          random_subset_instances(config.seed, config.count, 2, config.ray_count,
                                  config.dist_min, config.dist_max);
      report.rows.resize(instances.size());
#pragma omp parallel for schedule(static)
      for (long i = 0; i < static_cast<long>(instances.size()); ++i) {
        report.rows[static_cast<std::size_t>(i)] =
            subset_row(i, spec, instances[static_cast<std::size_t>(i)]);
      }
      break;
    }
    case SweepSource::Family: {
      if (config.i_end < config.i_begin) {
        throw std::invalid_argument("empty sweep range");
      }
      const long n = config.i_end - config.i_begin + 1;
      report.rows.resize(static_cast<std::size_t>(n));
      if (config.family == "naive-killer") {
#pragma omp parallel for schedule(static)
        for (long k = 0; k < n; ++k) {
          const int index = config.i_begin + static_cast<int>(k);
          const SubsetInstance inst =
              gen_naive_killer(config.ray_count, index, config.epsilon);
          report.rows[static_cast<std::size_t>(k)] = subset_row(index, spec, inst);
        }
      } else {
#pragma omp parallel for schedule(static)
        for (long k = 0; k < n; ++k) {
          const int index = config.i_begin + static_cast<int>(k);
          const Instance inst = family_instance(config, index);
          report.rows[static_cast<std::size_t>(k)] = weighted_row(index, spec, inst);
        }
      }
      break;
    }
  }

  for (const ResultRow& row : report.rows) {
    if (row.checked && !row.within) ++report.violations;
  }

  std::ostringstream body;
  if (config.format == OutputFormat::Csv) {
    write_rows_csv(body, report.rows);
  } else {
    write_rows_json(body, report);
  }
  if (config.out_path.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream out(config.out_path);
    if (!out) throw std::runtime_error("cannot write " + config.out_path);
    out << body.str();
  }
  return report;
}

void write_rows_csv(std::ostream& os, const std::vector<ResultRow>& rows) {
  os << kCsvHeader << '\n';
  for (const ResultRow& row : rows) {
    os << row.id << ',' << row.m << ',' << format_double(row.goal) << ',' << row.s << ','
       << format_double(row.opt) << ','
       << (std::isnan(row.xi) ? std::string() : format_double(row.xi)) << ','
       << format_double(row.cost) << ',' << format_double(row.ratio) << ','
       << format_double(row.bound) << ',' << (row.within ? 1 : 0) << '\n';
  }
}

void write_rows_json(std::ostream& os, const RunReport& report) {
  json rows = json::array();
  for (const ResultRow& row : report.rows) {
    rows.push_back({{"id", row.id},
                    {"m", row.m},
                    {"W", row.goal},
                    {"s_I", row.s},
                    {"opt", row.opt},
                    {"xi", std::isnan(row.xi) ? json() : json(row.xi)},
                    {"cost", row.cost},
                    {"ratio", row.ratio},
                    {"bound", row.bound},
                    {"pass", row.within}});
  }
  os << json{{"rows", rows}, {"violations", report.violations}}.dump(2) << '\n';
}

}  // namespace starsearch
