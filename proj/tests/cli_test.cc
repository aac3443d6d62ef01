#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>

#include "test_util.h"

namespace optagg {
namespace {

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun Cli(const std::string& args) {
  const std::string cmd = std::string(OPTAGG_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string Inputs() {
  return "--topology " + testing::DataPath("cost239.txt") + " --demands " +
         testing::DataPath("fixture_demands.csv");
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("optagg_cli_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string Tmp(const std::string& name) const { return (dir_ / name).string(); }
  std::filesystem::path dir_;
};

TEST_F(CliTest, PlanAndBaseline) {
  CliRun plan = Cli("plan " + Inputs());
  ASSERT_EQ(plan.status, 0);
  auto j = nlohmann::json::parse(plan.out);
  EXPECT_EQ(j["total_cost"], 13);
  EXPECT_EQ(j["demands"].size(), 10u);

  CliRun base = Cli("baseline " + Inputs());
  ASSERT_EQ(base.status, 0);
  EXPECT_EQ(base.out, "18\n");
  CliRun json = Cli("baseline --json " + Inputs());
  EXPECT_EQ(nlohmann::json::parse(json.out)["total_cost"], 18);
}

TEST_F(CliTest, ValidateAcceptsSolverPlanAndRejectsTampering) {
  const std::string plan_path = Tmp("plan.json");
  ASSERT_EQ(Cli("plan " + Inputs() + " --out " + plan_path).status, 0);
  CliRun ok = Cli("validate " + Inputs() + " --plan " + plan_path);
  EXPECT_EQ(ok.status, 0);
  EXPECT_NE(ok.out.find("VALID"), std::string::npos);

  auto j = nlohmann::json::parse(testing::ReadFile(plan_path));
  j["demands"][0]["partner"] = nullptr;
  j["demands"][0]["agg_node"] = nullptr;
  j["demands"][0]["shared_segment"] = nullptr;
  const std::string bad_path = Tmp("bad.json");
  std::ofstream(bad_path) << j.dump();
  CliRun bad = Cli("validate " + Inputs() + " --plan " + bad_path);
  EXPECT_EQ(bad.status, 1);
  EXPECT_NE(bad.out.find("INVALID"), std::string::npos);
  EXPECT_NE(bad.out.find("eq6_d0_d5"), std::string::npos);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(Cli("plan " + Inputs() + " --no-such-flag").status, 2);
  EXPECT_EQ(Cli("no-such-command").status, 2);
  EXPECT_EQ(Cli("plan --topology " + Tmp("missing.txt") + " --demands x").status, 3);
  EXPECT_EQ(Cli("gen-traffic --topology " + testing::DataPath("cost239.txt") +
                " --dests 10 --seed 1").status,
            2);
  EXPECT_EQ(Cli("--help").status, 0);
  const std::string malformed = Tmp("bad_demands.csv");
  std::ofstream(malformed) << "7;2\n";
  EXPECT_EQ(Cli("plan --topology " + testing::DataPath("cost239.txt") + " --demands " + malformed).status,
            1);
}

TEST_F(CliTest, GenTrafficFeedsPlan) {
  const std::string demands = Tmp("demands.csv");
  CliRun gen = Cli("gen-traffic --topology " + testing::DataPath("cost239.txt") +
                " --dests 4 --seed 11 --out " + demands);
  ASSERT_EQ(gen.status, 0);
  EXPECT_EQ(testing::ReadFile(demands), Cli("gen-traffic --topology " + testing::DataPath("cost239.txt") +
                                            " --dests 4 --seed 11").out);
  CliRun plan = Cli("plan --topology " + testing::DataPath("cost239.txt") + " --demands " + demands);
  ASSERT_EQ(plan.status, 0);
  EXPECT_EQ(nlohmann::json::parse(plan.out)["demands"].size(), 8u);
}

TEST_F(CliTest, ExportLp) {
  CliRun lp = Cli("export-lp " + Inputs());
  ASSERT_EQ(lp.status, 0);
  EXPECT_EQ(lp.out.rfind("\\", 0), 0u);
  EXPECT_NE(lp.out.find("Subject To"), std::string::npos);
  EXPECT_NE(lp.out.find("End"), std::string::npos);
}

TEST_F(CliTest, OracleCheckAndExperiment) {
  CliRun oracle = Cli("oracle-check --samples 20 --seed 3");
  EXPECT_EQ(oracle.status, 0);
  EXPECT_NE(oracle.out.find("0 failures"), std::string::npos);

  CliRun exp = Cli("experiment --topology " + testing::DataPath("cost239.txt") + " --loads 5,7 --samples 2");
  ASSERT_EQ(exp.status, 0);
  EXPECT_EQ(exp.out.rfind("load,sample,seed,cost_conventional,cost_aggregation,gain\n", 0), 0u);
  EXPECT_EQ(std::count(exp.out.begin(), exp.out.end(), '\n'), 5);
}

}  // namespace
}  // namespace optagg
