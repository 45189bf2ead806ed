#include "prophet/cli/cli.h"

#include <algorithm>
#include <filesystem>
#include <optional>
#include <sstream>
#include <variant>

#include <CLI11.hpp>

#include "prophet/harness/catalog.h"
#include "prophet/harness/csv.h"
#include "prophet/harness/instance_io.h"
#include "prophet/harness/replication.h"
#include "prophet/harness/scaling.h"
#include "prophet/harness/simulate.h"
#include "prophet/offline/coupling.h"
#include "prophet/offline/experiments.h"
#include "prophet/offline/offline_value.h"
#include "prophet/policies/ski_rental.h"

namespace prophet::cli {
namespace {

struct Config {
  std::string instance;
  std::string instance_file;
  std::vector<std::string> policies;
  int reps = 100;
  std::uint64_t seed = 1;
  std::vector<std::string> k_list;
  std::string scaling;
  std::string out;
  int oracle_samples = 50;
  double irt_band = 0.25;
  bool no_disagreements = false;
  std::optional<int> horizon;
  std::string experiment;
  std::vector<int> horizons = {100, 400, 1600, 6400};
  int mc_reps = 10000;
};

struct LoadedInstance {
  harness::CatalogEntry entry;
  std::optional<harness::ScalingRule> scaling;
  std::vector<int> k_list;
};

LoadedInstance load(const Config& cfg) {
  if (cfg.instance.empty() == cfg.instance_file.empty()) {
    throw ConfigError("give exactly one of --instance or --instance-file");
  }
  if (!cfg.instance.empty()) return {harness::instance_catalog(cfg.instance), std::nullopt, {}};
  auto file = harness::load_instance_file(cfg.instance_file);
  return {std::move(file.instance), file.scaling, std::move(file.k_list)};
}

AllocationInstance allocation_of(const harness::CatalogEntry& entry) {
  if (const auto* inst = std::get_if<AllocationInstance>(&entry)) return *inst;
  throw ConfigError("this command needs an allocation instance; '" + std::get<harness::SkiRentalInstance>(entry).name +
                    "' is a ski rental instance");
}

std::vector<int> parse_k_list(const std::vector<std::string>& raw) {
  std::vector<int> ks;
  for (const auto& s : raw) {
    std::size_t used = 0;
    int k = 0;
    try {
      k = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size() || k < 1) throw ConfigError("k must be a positive integer, got '" + s + "'");
    ks.push_back(k);
  }
  return ks;
}

harness::RunOptions run_options(const Config& cfg) {
  if (cfg.reps < 1) throw ConfigError("--reps must be at least 1");
  if (cfg.oracle_samples < 1) throw ConfigError("--oracle-samples must be at least 1");
  if (!(cfg.irt_band >= 0.0 && cfg.irt_band < 0.5)) throw ConfigError("--irt-band must lie in [0, 0.5)");
  harness::RunOptions opts;
  opts.reps = cfg.reps;
  opts.seed = cfg.seed;
  opts.policy.oracle_samples = cfg.oracle_samples;
  opts.policy.irt_band = cfg.irt_band;
  opts.count_disagreements = !cfg.no_disagreements;
  return opts;
}

std::vector<std::string> policy_list(const Config& cfg, const AllocationInstance& inst, const harness::RunOptions& opts) {
  if (cfg.policies.empty()) throw ConfigError("give at least one policy");
  for (const auto& p : cfg.policies) policies::make_policy(p, inst, opts.policy);
  return cfg.policies;
}

harness::ScalingRule scaling_rule(const Config& cfg, const LoadedInstance& loaded) {
  if (!cfg.scaling.empty()) return harness::ScalingRule::parse(cfg.scaling);
  return loaded.scaling.value_or(harness::ScalingRule{});
}

void emit(const Config& cfg, const std::vector<harness::RegretReport>& reports,
          const std::map<std::string, double>& slopes, std::ostream& out) {
  std::ostringstream aggregate;
  harness::write_aggregate(aggregate, reports, slopes);
  if (!cfg.out.empty()) {
    std::ostringstream reps;
    harness::write_replications(reps, reports);
    const std::filesystem::path path(cfg.out);
    auto agg_path = path.parent_path() / path.stem();
    agg_path += ".aggregate.csv";
    harness::write_file_atomically(path, reps.str());
    harness::write_file_atomically(agg_path, aggregate.str());
  }
  out << aggregate.str();
}

int cmd_simulate(const Config& cfg, std::ostream& out) {
  const auto loaded = load(cfg);
  auto inst = allocation_of(loaded.entry);
  const auto opts = run_options(cfg);
  int k = 1;
  if (!cfg.k_list.empty()) {
    const auto ks = parse_k_list(cfg.k_list);
    if (ks.size() != 1) throw ConfigError("simulate takes a single --k; use sweep for several");
    k = ks.front();
    inst = scaling_rule(cfg, loaded).apply(inst, k);
  }
  std::vector<harness::RegretReport> reports;
  for (const auto& p : policy_list(cfg, inst, opts)) reports.push_back(harness::run_replications(inst, p, opts, k));
  emit(cfg, reports, {}, out);
  return kExitOk;
}

int cmd_sweep(const Config& cfg, std::ostream& out) {
  const auto loaded = load(cfg);
  const auto inst = allocation_of(loaded.entry);
  const auto opts = run_options(cfg);
  const auto ks = cfg.k_list.empty() ? loaded.k_list : parse_k_list(cfg.k_list);
  if (ks.empty()) throw ConfigError("the k list is empty");
  const auto result = harness::scaling_sweep(inst, scaling_rule(cfg, loaded), ks, policy_list(cfg, inst, opts), opts);
  std::vector<harness::RegretReport> reports;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    for (const auto& per_policy : result.reports) reports.push_back(per_policy[i]);
  }
  emit(cfg, reports, result.slopes, out);
  return kExitOk;
}

void write_output(const Config& cfg, const std::string& csv, std::ostream& out) {
  if (!cfg.out.empty()) harness::write_file_atomically(cfg.out, csv);
  out << csv;
}

const char* ski_action_name(int action) {
  switch (action) {
    case offline::SkiRentalHindsight::kRent:
      return "rent";
    case offline::SkiRentalHindsight::kBuy:
      return "buy";
    default:
      return "idle";
  }
}

int cmd_audit(const Config& cfg, std::ostream& out, std::ostream& err) {
  const auto loaded = load(cfg);
  CounterRng rng = make_stream(cfg.seed, 0, Stream::kArrivals);
  std::ostringstream csv;
  csv << "t,action,satisfying,compensation\n";

  if (const auto* ski = std::get_if<harness::SkiRentalInstance>(&loaded.entry)) {
    const int horizon = cfg.horizon.value_or(ski->horizon);
    if (horizon < 0) throw ConfigError("--horizon must be nonnegative");
    const int snow = std::min(horizon, arrivals::ArrivalModel::draw(ski->snow_days, rng));
    const int tau = std::min(ski->tau, horizon);
    const auto report = offline::ski_rental_audit(horizon, tau, ski->buy_cost, snow);
    for (const auto& r : report.records) {
      csv << r.t << ',' << ski_action_name(r.action) << ',' << (r.was_satisfying ? 1 : 0) << ','
          << harness::format_number(r.marginal_compensation) << '\n';
    }
    write_output(cfg, csv.str(), out);
    err << "snow_days=" << snow << " regret=" << harness::format_number(report.total_compensation) << '\n';
    return kExitOk;
  }

  auto inst = std::get<AllocationInstance>(loaded.entry);
  if (cfg.horizon) {
    if (*cfg.horizon < 0) throw ConfigError("--horizon must be nonnegative");
    inst.horizon = *cfg.horizon;
  }
  const auto opts = run_options(cfg);
  const std::string policy_name = cfg.policies.empty() ? "bayes" : cfg.policies.front();
  auto policy = policies::make_policy(policy_name, inst, opts.policy);
  const auto path = harness::sample_arrivals(inst, rng);
  const auto table = offline::offline_dp_table(inst, path.types());
  CounterRng policy_rng = make_stream(cfg.seed, 0, Stream::kPolicy);
  const auto trace = harness::simulate(inst, path, *policy, policy_rng);
  const auto report = offline::coupling_audit(trace, inst, table);
  for (std::size_t k = 0; k < report.records.size(); ++k) {
    const auto& r = report.records[k];
    csv << r.t << ',' << policies::to_string(trace.periods[k].action) << ',' << (r.was_satisfying ? 1 : 0) << ','
        << harness::format_number(r.marginal_compensation) << '\n';
  }
  write_output(cfg, csv.str(), out);
  const double v_off = path.horizon() > 0 ? table.value(path.horizon(), inst.budgets) : 0.0;
  err << "v_off_dp=" << harness::format_number(v_off) << " v_on=" << harness::format_number(trace.total_reward)
      << " compensation_sum=" << harness::format_number(report.total_compensation) << '\n';
  return kExitOk;
}

std::string rational(const offline::Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

int cmd_experiments(const Config& cfg, std::ostream& out) {
  std::ostringstream csv;
  if (cfg.experiment == "fluid-gap") {
    if (cfg.mc_reps < 0) throw ConfigError("--reps must be nonnegative for fluid-gap");
    if (cfg.horizons.empty()) throw ConfigError("the horizon list is empty");
    const auto base = offline::degenerate_multisecretary(100);
    const auto result = offline::fluid_gap_experiment(base, cfg.horizons, cfg.mc_reps, cfg.seed);
    csv << "horizon,fluid_value,exact_offline,exact_gap,mc_gap,mc_stderr,reps,exact_slope,mc_slope\n";
    for (const auto& p : result.points) {
      csv << p.horizon << ',' << harness::format_number(p.fluid_value) << ','
          << harness::format_number(p.exact_offline) << ',' << harness::format_number(p.exact_gap) << ','
          << harness::format_number(p.mc_gap) << ',' << harness::format_number(p.mc_stderr) << ',' << p.reps << ','
          << harness::format_number(result.exact_slope) << ',' << harness::format_number(result.mc_slope) << '\n';
    }
  } else if (cfg.experiment == "counterexample") {
    const auto r = offline::bipartite_counterexample_check();
    csv << "bayes_value,optimal_value,gap,gap_decimal,tie_holds\n";
    csv << rational(r.bayes_value) << ',' << rational(r.optimal_value) << ',' << rational(r.gap) << ','
        << harness::format_number(boost::rational_cast<double>(r.gap)) << ',' << (r.tie_holds ? 1 : 0) << '\n';
  } else if (cfg.experiment == "ski-rental") {
    const std::string name = cfg.instance.empty() ? "skirental-demo" : cfg.instance;
    const auto entry = harness::instance_catalog(name);
    const auto* ski = std::get_if<harness::SkiRentalInstance>(&entry);
    if (ski == nullptr) throw ConfigError("'" + name + "' is not a ski rental instance");
    csv << "snow_days,probability,online_cost,offline_cost,regret_formula,regret_direct\n";
    for (int x = 0; x <= ski->horizon; ++x) {
      csv << x << ',' << harness::format_number(ski->snow_days[x]) << ','
          << policies::ski_rental_cost(ski->horizon, ski->tau, ski->buy_cost, x) << ',' << std::min(x, ski->buy_cost)
          << ',' << offline::ski_rental_regret_formula(ski->horizon, ski->tau, ski->buy_cost, x) << ','
          << offline::ski_rental_direct_regret(ski->horizon, ski->tau, ski->buy_cost, x) << '\n';
    }
  } else {
    throw ConfigError("unknown experiment '" + cfg.experiment + "' (expected fluid-gap, counterexample or ski-rental)");
  }
  write_output(cfg, csv.str(), out);
  return kExitOk;
}

void add_instance_flags(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--instance", cfg.instance, "Catalog instance name");
  cmd->add_option("--instance-file", cfg.instance_file, "JSON instance file");
  cmd->add_option("--seed", cfg.seed, "Base seed");
  cmd->add_option("--out", cfg.out, "Output CSV path");
}

void add_run_flags(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--reps", cfg.reps, "Replications per policy");
  cmd->add_option("--scaling", cfg.scaling, "Scaling rule: linear or k-plus-k07");
  cmd->add_option("--oracle-samples", cfg.oracle_samples, "Monte-Carlo samples per estimate");
  cmd->add_option("--irt-band", cfg.irt_band, "Band of the infrequent re-solve rounding rule");
  cmd->add_flag("--no-disagreements", cfg.no_disagreements, "Skip the per-period disagreement count");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app("Online allocation regret experiments", "prophet");
  app.require_subcommand(1);

  auto* simulate = app.add_subcommand("simulate", "Run replications and report regret");
  add_instance_flags(simulate, cfg);
  add_run_flags(simulate, cfg);
  simulate->add_option("--policy,--policies", cfg.policies, "Policy names")->delimiter(',');
  simulate->add_option("--k", cfg.k_list, "Scale the instance by k");

  auto* sweep = app.add_subcommand("sweep", "Run a scaling sweep");
  add_instance_flags(sweep, cfg);
  add_run_flags(sweep, cfg);
  sweep->add_option("--policy,--policies", cfg.policies, "Policy names")->delimiter(',');
  sweep->add_option("--k", cfg.k_list, "Scaling factors")->delimiter(',');

  auto* audit = app.add_subcommand("audit", "Audit one path against the hindsight DP");
  add_instance_flags(audit, cfg);
  audit->add_option("--policy,--policies", cfg.policies, "Policy name")->delimiter(',');
  audit->add_option("--horizon", cfg.horizon, "Override the horizon");
  audit->add_option("--oracle-samples", cfg.oracle_samples, "Monte-Carlo samples per estimate");
  audit->add_option("--irt-band", cfg.irt_band, "Band of the infrequent re-solve rounding rule");

  auto* experiments = app.add_subcommand("experiments", "fluid-gap, counterexample or ski-rental");
  experiments->add_option("name", cfg.experiment, "Experiment name")->required();
  experiments->add_option("--instance", cfg.instance, "Ski rental catalog instance");
  experiments->add_option("--horizons", cfg.horizons, "Fluid-gap horizons")->delimiter(',');
  experiments->add_option("--reps", cfg.mc_reps, "Fluid-gap Monte-Carlo replications");
  experiments->add_option("--seed", cfg.seed, "Base seed");
  experiments->add_option("--out", cfg.out, "Output CSV path");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    if (simulate->parsed()) return cmd_simulate(cfg, out);
    if (sweep->parsed()) return cmd_sweep(cfg, out);
    if (audit->parsed()) return cmd_audit(cfg, out, err);
    return cmd_experiments(cfg, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
}

}  // namespace prophet::cli
