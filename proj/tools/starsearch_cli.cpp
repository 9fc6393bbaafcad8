// Command-line front end: simulate strategies on instance files, query the
// offline oracles, sweep competitive ratios, generate adversarial instances,
// run the inequality checks, and exercise the partial-information reduction.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

#include "starsearch/adversary.hpp"
#include "starsearch/analysis.hpp"
#include "starsearch/engine.hpp"
#include "starsearch/io.hpp"
#include "starsearch/offline.hpp"
#include "starsearch/partialinfo.hpp"
#include "starsearch/runner.hpp"
#include "starsearch/strategies.hpp"

namespace ss = starsearch;

namespace {

void emit(const ss::json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    ss::save_json(out_path, j);
  }
}

bool parse_range(const std::string& text, int& lo, int& hi) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      lo = hi = std::stoi(text);
    } else {
      lo = std::stoi(text.substr(0, colon));
      hi = std::stoi(text.substr(colon + 1));
    }
  } catch (const std::exception&) {
    return false;
  }
  return lo <= hi;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weighted star-search strategies, oracles, and adversaries"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  std::string out_path;
  std::string format = "csv";
  app.add_option("--seed", seed, "seed for random instance streams");
  app.add_option("--out", out_path, "output file (default: stdout)");
  app.add_option("--format", format, "output format for sweeps: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  // simulate
  auto* sim = app.add_subcommand("simulate", "run a strategy on an instance file");
  std::string sim_strategy = "adsch";
  std::string sim_instance;
  sim->add_option("--strategy", sim_strategy, "adsub|adsch|fixed:B|naive|classic|multi:T");
  sim->add_option("--instance", sim_instance, "instance JSON file")->required();

  // opt
  auto* opt = app.add_subcommand("opt", "offline oracles for a weighted instance");
  std::string opt_instance;
  opt->add_option("--instance", opt_instance, "instance JSON file")->required();

  // ratio-sweep
  auto* sweep = app.add_subcommand("ratio-sweep", "ratio table over an instance batch");
  std::string sweep_strategy = "adsch";
  std::string sweep_mode = "weighted";
  std::string sweep_family;
  std::string sweep_range = "1:20";
  int sweep_m = 5;
  int sweep_count = 100;
  int sweep_s = 1;
  double sweep_t = 1.0;
  double sweep_eps = 1e-6;
  std::string sweep_dist = "1:100";
  double sweep_wmin = 0.1, sweep_wmax = 10.0;
  double sweep_fraction = 0.5;
  double sweep_fixed_goal = -1.0;
  std::string sweep_family_strategy = "adsub";
  sweep->add_option("--strategy", sweep_strategy, "strategy spec string");
  sweep->add_option("--mode", sweep_mode, "weighted | subset | family")
      ->check(CLI::IsMember({"weighted", "subset", "family"}));
  sweep->add_option("--family", sweep_family,
                    "single|subsets|weights|all-targets|naive-killer (family mode)");
  sweep->add_option("--i", sweep_range, "schedule index range lo:hi (family mode)");
  sweep->add_option("--m", sweep_m, "ray count (max ray count in subset mode)");
  sweep->add_option("--count", sweep_count, "number of random instances");
  sweep->add_option("--s", sweep_s, "cardinality parameter (subsets family)");
  sweep->add_option("--t", sweep_t, "weight parameter (weights family)");
  sweep->add_option("--epsilon", sweep_eps, "adversarial placement margin");
  sweep->add_option("--dist", sweep_dist, "distance range lo:hi");
  sweep->add_option("--w-min", sweep_wmin, "minimum target weight");
  sweep->add_option("--w-max", sweep_wmax, "maximum target weight");
  sweep->add_option("--w-fraction", sweep_fraction, "goal as a fraction of total weight");
  sweep->add_option("--w-fixed", sweep_fixed_goal, "fixed weight goal (overrides fraction)");
  sweep->add_option("--adv-strategy", sweep_family_strategy,
                    "placement target for the all-targets family");

  // adversary
  auto* adv = app.add_subcommand("adversary", "generate an adversarial instance file");
  std::string adv_family = "single";
  int adv_m = 3;
  int adv_i = 10;
  int adv_s = 1;
  double adv_t = 1.0;
  double adv_eps = 1e-6;
  std::string adv_strategy = "adsub";
  int adv_objective = 1;
  int adv_budget = 30;
  adv->add_option("--family", adv_family,
                  "single|subsets|weights|all-targets|naive-killer|adaptive")
      ->check(CLI::IsMember(
          {"single", "subsets", "weights", "all-targets", "naive-killer", "adaptive"}));
  adv->add_option("--m", adv_m, "ray count");
  adv->add_option("--i", adv_i, "schedule step / snapshot index");
  adv->add_option("--s", adv_s, "cardinality parameter");
  adv->add_option("--t", adv_t, "weight parameter");
  adv->add_option("--epsilon", adv_eps, "placement margin");
  adv->add_option("--strategy", adv_strategy, "strategy the placement targets");
  adv->add_option("--objective", adv_objective, "forced finds (adaptive family)");
  adv->add_option("--budget", adv_budget, "placement budget (adaptive family)");

  // lemma-check
  auto* lemma = app.add_subcommand("lemma-check", "numeric inequality verifiers");
  int phi_gap_q = 0;
  int h_bound_q = 0;
  lemma->add_option("--phi-gap", phi_gap_q, "check the gap inequality up to q_max");
  lemma->add_option("--h-bound", h_bound_q, "check the transition factor up to q_max");

  // partial
  auto* partial = app.add_subcommand("partial", "partial-information model tools");
  std::string lambda_path;
  bool run_oracle = false;
  bool run_reduce = false;
  bool list_presentations = false;
  partial->add_option("--lambda", lambda_path, "multiset JSON file")->required();
  partial->add_flag("--oracle", run_oracle, "compute the intrinsic cost");
  partial->add_flag("--reduce", run_reduce, "check the signed-search reduction");
  partial->add_flag("--presentations", list_presentations, "list all presentations");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sim) {
      const ss::json j = ss::load_json(sim_instance);
      const ss::StrategySpec spec = ss::StrategySpec::parse(sim_strategy);
      ss::Trace trace;
      if (ss::json_is_subset_instance(j)) {
        trace = ss::run_strategy(spec, ss::subset_from_json(j));
      } else {
        trace = ss::run_strategy(spec, ss::instance_from_json(j));
      }
      emit(ss::trace_to_json(trace), out_path);
      return 0;
    }

    if (*opt) {
      const ss::json j = ss::load_json(opt_instance);
      if (ss::json_is_subset_instance(j)) {
        throw std::invalid_argument("opt expects a weighted instance file");
      }
      const ss::Instance inst = ss::instance_from_json(j);
      emit(ss::summary_to_json(ss::analyze_instance(inst), inst.ray_count()), out_path);
      return 0;
    }

    if (*sweep) {
      ss::ExperimentConfig config;
      config.strategy = sweep_strategy;
      config.seed = seed;
      config.ray_count = sweep_m;
      config.count = sweep_count;
      config.s = sweep_s;
      config.t_real = sweep_t;
      config.epsilon = sweep_eps;
      config.family = sweep_family;
      config.family_strategy = sweep_family_strategy;
      config.out_path = out_path;
      config.format = format == "json" ? ss::OutputFormat::Json : ss::OutputFormat::Csv;
      int lo = 0, hi = 0;
      if (!parse_range(sweep_dist, lo, hi) && sweep_mode != "family") {
        throw std::invalid_argument("bad --dist range");
      }
      config.dist_min = lo;
      config.dist_max = hi;
      config.w_min = sweep_wmin;
      config.w_max = sweep_wmax;
      config.w_rule = sweep_fixed_goal >= 0.0 ? ss::WeightRule::fixed(sweep_fixed_goal)
                                              : ss::WeightRule::fraction(sweep_fraction);
      if (sweep_mode == "weighted") {
        config.source = ss::SweepSource::RandomWeighted;
      } else if (sweep_mode == "subset") {
        config.source = ss::SweepSource::RandomSubset;
      } else {
        config.source = ss::SweepSource::Family;
        if (!parse_range(sweep_range, config.i_begin, config.i_end)) {
          throw std::invalid_argument("bad --i range");
        }
      }
      const ss::RunReport report = ss::run_experiment(config);
      if (report.violations > 0) {
        std::cerr << report.violations << " bound violation(s)\n";
        return 1;
      }
      return 0;
    }

    if (*adv) {
      if (adv_family == "adaptive") {
        const ss::AdversaryResult result = ss::adaptive_adversary(
            ss::StrategySpec::parse(adv_strategy), adv_m, adv_objective, adv_budget,
            adv_eps);
        ss::json j = ss::instance_to_json(result.instance);
        j["ratio"] = result.ratio;
        j["budget_exhausted"] = result.budget_exhausted;
        emit(j, out_path);
        return 0;
      }
      if (adv_family == "naive-killer") {
        emit(ss::subset_to_json(ss::gen_naive_killer(adv_m, adv_i, adv_eps)), out_path);
        return 0;
      }
      ss::Instance inst = [&] {
        if (adv_family == "single") return ss::gen_single_target(adv_m, adv_i, adv_eps);
        if (adv_family == "subsets")
          return ss::gen_subsets_lb(adv_m, adv_s, adv_i, adv_eps);
        if (adv_family == "weights")
          return ss::gen_weights_lb(adv_m, adv_t, adv_i, adv_eps);
        return ss::gen_all_targets(ss::StrategySpec::parse(adv_strategy), adv_m, adv_i,
                                   adv_eps);
      }();
      emit(ss::instance_to_json(inst), out_path);
      return 0;
    }

    if (*lemma) {
      if (phi_gap_q <= 0 && h_bound_q <= 0) {
        throw std::invalid_argument("lemma-check needs --phi-gap and/or --h-bound");
      }
      ss::json j;
      bool ok = true;
      if (phi_gap_q > 0) {
        const ss::PhiGapReport rep = ss::verify_phi_gap(phi_gap_q);
        j["phi_gap"] = ss::phi_gap_report_to_json(rep);
        ok = ok && rep.pass;
      }
      if (h_bound_q > 0) {
        const ss::HBoundReport rep = ss::verify_h_bound(h_bound_q);
        j["h_bound"] = ss::h_bound_report_to_json(rep);
        ok = ok && rep.pass;
      }
      emit(j, out_path);
      return ok ? 0 : 1;
    }

    if (*partial) {
      const ss::PartialMultiset lambda = ss::multiset_from_json(ss::load_json(lambda_path));
      ss::json j = ss::multiset_to_json(lambda);
      if (list_presentations || run_reduce) {
        const auto all = ss::presentations(lambda);
        j["presentation_count"] = all.size();
        if (list_presentations) {
          ss::json arr = ss::json::array();
          for (const auto& inst : all) arr.push_back(ss::instance_to_json(inst));
          j["presentations"] = arr;
        }
        if (run_reduce) {
          ss::json cases = ss::json::array();
          bool all_equal = true;
          for (const auto& inst : all) {
            auto wrapped = ss::ws_from_signed(ss::signed_baseline(inst.ray_count()));
            const ss::Trace ws_trace = ss::simulate(*wrapped, inst);
            std::vector<int> found_before;
            for (std::size_t k = 0; k + 1 < ws_trace.found.size(); ++k) {
              found_before.push_back(ws_trace.found[k].first);
            }
            const auto [weighted, signed_inst] =
                ss::reduce_ws_instance(inst, found_before);
            auto inner = ss::signed_baseline(inst.ray_count());
            const ss::Trace ss_trace = ss::simulate(*inner, signed_inst.to_instance());
            const bool equal = ws_trace.total_cost == ss_trace.total_cost &&
                               ws_trace.excursions.size() == ss_trace.excursions.size();
            all_equal = all_equal && equal;
            cases.push_back({{"instance", ss::instance_to_json(inst)},
                             {"ws_cost", ws_trace.total_cost},
                             {"ss_cost", ss_trace.total_cost},
                             {"identical", equal}});
          }
          j["reduction_cases"] = cases;
          j["reduction_identity"] = all_equal;
        }
      }
      if (run_oracle) {
        j["intrinsic"] = ss::intrinsic_cost(lambda);
      }
      emit(j, out_path);
      return 0;
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 2;
  }
  return 0;
}
