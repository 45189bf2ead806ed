#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "prophet/cli/cli.h"

namespace prophet::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST(Cli, SimulatePrintsOneAggregateRow) {
  const auto r = call({"simulate", "--instance", "packing-1", "--policy", "bayes", "--reps", "6", "--seed", "7"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], "instance,policy,k,mean_regret,stderr,ci90_lo,ci90_hi,slope_loglog");
  EXPECT_EQ(rows[1].rfind("packing-1,bayes,1,", 0), 0u);
}

TEST(Cli, SimulateIsReproducible) {
  const std::vector<std::string> args = {"simulate", "--instance", "matching-1", "--policies", "bayes,rr", "--reps", "5"};
  EXPECT_EQ(call(args).out, call(args).out);
}

TEST(Cli, BadConfigurationExitsWithTwo) {
  EXPECT_EQ(call({"simulate", "--instance", "packing-1", "--policy", "greedy"}).code, kExitConfig);
  EXPECT_EQ(call({"simulate", "--instance", "packing-1", "--policy", "bayes", "--reps", "0"}).code, kExitConfig);
  EXPECT_EQ(call({"simulate", "--instance", "nowhere", "--policy", "bayes"}).code, kExitConfig);
  EXPECT_EQ(call({"simulate", "--policy", "bayes"}).code, kExitConfig);
  EXPECT_EQ(call({"simulate", "--instance", "packing-1", "--policy", "competitive"}).code, kExitConfig);
  EXPECT_EQ(call({"frobnicate"}).code, kExitConfig);
  EXPECT_EQ(call({}).code, kExitConfig);
  EXPECT_EQ(call({"simulate", "--instance", "packing-1", "--policy", "bayes", "--reps", "many"}).code, kExitConfig);
}

TEST(Cli, SweepKListValidation) {
  EXPECT_EQ(call({"sweep", "--instance", "packing-1", "--policies", "bayes"}).code, kExitConfig);
  EXPECT_EQ(call({"sweep", "--instance", "packing-1", "--policies", "bayes", "--k", "1,2.5"}).code, kExitConfig);
  EXPECT_EQ(call({"sweep", "--instance", "packing-1", "--policies", "bayes", "--k", "0"}).code, kExitConfig);
}

TEST(Cli, SweepWritesBothFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "prophet_cli_sweep";
  std::filesystem::create_directories(dir);
  const auto out = dir / "sweep.csv";
  const auto r = call({"sweep", "--instance", "matching-1", "--policies", "bayes,marginal", "--k", "1,2", "--reps", "4",
                       "--scaling", "linear", "--out", out.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(lines(r.out).size(), 5u);
  ASSERT_TRUE(std::filesystem::exists(out));
  ASSERT_TRUE(std::filesystem::exists(dir / "sweep.aggregate.csv"));
  std::ifstream in(out);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "instance,policy,k,rep,seed,v_off,v_on,regret,disagreements,forced_rejects");
  std::filesystem::remove_all(dir);
}

TEST(Cli, InstanceFileSweepUsesItsKList) {
  const auto path = std::filesystem::temp_directory_path() / "prophet_cli_instance.json";
  {
    std::ofstream f(path);
    f << R"({"kind": "packing", "d": 1, "n": 2, "A": [1, 1], "rewards": [2, 1], "budgets": [5], "horizon": 10,
             "arrival": {"kind": "multinomial", "p": [0.5, 0.5]}, "scaling": {"rule": "linear", "k_list": [1, 3]}})";
  }
  const auto r = call({"sweep", "--instance-file", path.string(), "--policies", "bayes", "--reps", "3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(lines(r.out).size(), 3u);
  std::filesystem::remove(path);
}

TEST(Cli, AuditSumsToTheRegret) {
  const auto r = call({"audit", "--instance", "counterexample-matching", "--seed", "4"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0], "t,action,satisfying,compensation");
  double sum = 0;
  for (std::size_t k = 1; k < rows.size(); ++k) sum += std::stod(rows[k].substr(rows[k].rfind(',') + 1));
  double v_off = 0, v_on = 0;
  std::sscanf(r.err.c_str(), "v_off_dp=%lf v_on=%lf", &v_off, &v_on);
  EXPECT_EQ(sum, v_off - v_on);
}

TEST(Cli, AuditEdgeCases) {
  EXPECT_EQ(call({"audit", "--instance", "packing-2"}).code, kExitRuntime);
  const auto zero = call({"audit", "--instance", "packing-1", "--horizon", "0"});
  EXPECT_EQ(zero.code, kExitOk) << zero.err;
  EXPECT_EQ(lines(zero.out).size(), 1u);
  EXPECT_EQ(call({"audit", "--instance", "packing-1", "--horizon", "-1"}).code, kExitConfig);
  const auto ski = call({"audit", "--instance", "skirental-demo", "--seed", "2"});
  EXPECT_EQ(ski.code, kExitOk);
  EXPECT_EQ(lines(ski.out).size(), 13u);
}

TEST(Cli, Experiments) {
  const auto gap = call({"experiments", "fluid-gap", "--horizons", "100,400", "--reps", "200"});
  ASSERT_EQ(gap.code, kExitOk) << gap.err;
  EXPECT_EQ(lines(gap.out).size(), 3u);
  const auto ce = call({"experiments", "counterexample"});
  ASSERT_EQ(ce.code, kExitOk);
  EXPECT_NE(ce.out.find("1/25,0.04,1"), std::string::npos);
  const auto ski = call({"experiments", "ski-rental"});
  EXPECT_EQ(ski.code, kExitOk);
  EXPECT_EQ(lines(ski.out).size(), 14u);
  EXPECT_EQ(call({"experiments", "ski-rental", "--instance", "packing-1"}).code, kExitConfig);
  EXPECT_EQ(call({"experiments", "prophet-inequality"}).code, kExitConfig);
}

TEST(Cli, HelpExitsCleanly) {
  const auto r = call({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("simulate"), std::string::npos);
}

}  // namespace
}  // namespace prophet::cli
