#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "starsearch/rng.hpp"
#include "starsearch/strategies.hpp"

namespace starsearch {

enum class SweepSource { RandomWeighted, RandomSubset, Family };
enum class OutputFormat { Csv, Json };

// One experiment: a strategy against a batch of instances, either seeded
// random draws or an adversarial family sweep over its schedule index.
struct ExperimentConfig {
  std::string strategy = "adsch";
  SweepSource source = SweepSource::RandomWeighted;

  // random sources
  std::uint64_t seed = 1;
  int ray_count = 5;
  int count = 100;
  double dist_min = 1.0, dist_max = 100.0;
  double w_min = 0.1, w_max = 10.0;
  WeightRule w_rule = WeightRule::fraction(0.5);

  // family sweeps; the id column carries the schedule index
  std::string family;  // single | subsets | weights | all-targets | naive-killer
  int i_begin = 1, i_end = 20;
  int s = 1;
  double t_real = 1.0;
  double epsilon = 1e-6;
  std::string family_strategy = "adsub";  // placement target for all-targets

  std::string out_path;  // empty: stdout
  OutputFormat format = OutputFormat::Csv;
};

struct ResultRow {
  long id = 0;
  int m = 0;
  double goal = 0.0;   // |S| for subset rows
  int s = 0;           // s_I, or |S| for subset rows
  double opt = 0.0;    // d_S for subset rows
  double xi = 0.0;     // NaN for subset rows
  double cost = 0.0;
  double ratio = 0.0;
  double bound = 0.0;  // phi(m - s) or 3+2e
  bool within = false; // ratio <= min(bound, xi guarantee) + 1e-9
  bool checked = false;  // bound is theorem-backed for this row's strategy
};

struct RunReport {
  std::vector<ResultRow> rows;
  int violations = 0;  // checked rows outside their bound
};

// Computes all rows (in parallel, output ordered by id) and writes them in
// the configured format. Exit-code contract: violations > 0 means a
// theorem-backed bound failed.
RunReport run_experiment(const ExperimentConfig& config);

void write_rows_csv(std::ostream& os, const std::vector<ResultRow>& rows);
void write_rows_json(std::ostream& os, const RunReport& report);

extern const char* const kCsvHeader;  // id,m,W,s_I,opt,xi,cost,ratio,bound,pass

}  // namespace starsearch
