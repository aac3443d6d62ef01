#include "optagg/experiment.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <set>
#include <sstream>

#include "optagg/agg_solver.h"
#include "optagg/errors.h"
#include "test_util.h"

namespace optagg {
namespace {

using testing::Cost239;

ExperimentRecord Record(std::size_t load, std::size_t sample, std::int64_t conventional,
                        std::int64_t aggregation) {
  return {load, sample, 0, conventional, aggregation,
          Rational(conventional - aggregation, conventional)};
}

TEST(SampleSeed, DeterministicAndDistinct) {
  EXPECT_EQ(sample_seed(239, 5, 0), sample_seed(239, 5, 0));
  std::set<std::uint64_t> seen;
  for (std::size_t load : {5, 7, 9}) {
    for (std::size_t s = 0; s < 10; ++s) seen.insert(sample_seed(239, load, s));
  }
  EXPECT_EQ(seen.size(), 30u);
  EXPECT_NE(sample_seed(239, 5, 0), sample_seed(240, 5, 0));
}

TEST(RunExperiment, DefaultShape) {
  Topology t = Cost239();
  ExperimentConfig cfg;
  auto records = run_experiment(t, cfg);
  ASSERT_EQ(records.size(), 30u);
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    EXPECT_EQ(r.load, cfg.loads[i / 10]);
    EXPECT_EQ(r.sample, i % 10);
    EXPECT_EQ(r.seed, sample_seed(kDefaultBaseSeed, r.load, r.sample));
    EXPECT_LE(r.cost_aggregation, r.cost_conventional);
    EXPECT_GT(r.cost_conventional, 0);
    EXPECT_EQ(r.gain, Rational(r.cost_conventional - r.cost_aggregation, r.cost_conventional));
    // Recompute from scratch with the recorded seed.
    DemandSet d = generate_two_to_many(t, r.load, r.seed);
    EXPECT_EQ(d.size(), 2 * r.load);
    EXPECT_EQ(conventional_solve(t, d).total_cost, r.cost_conventional);
    EXPECT_EQ(solve(t, d).total_cost, r.cost_aggregation);
  }
}

TEST(RunExperiment, RepeatableCsv) {
  Topology t = Cost239();
  ExperimentConfig cfg;
  cfg.samples_per_load = 4;
  EXPECT_EQ(records_to_csv(run_experiment(t, cfg)), records_to_csv(run_experiment(t, cfg)));
  ExperimentConfig other = cfg;
  other.base_seed = cfg.base_seed + 1;
  EXPECT_NE(records_to_csv(run_experiment(t, cfg)), records_to_csv(run_experiment(t, other)));
}

TEST(RunExperiment, VerifyPasses) {
  Topology t = Cost239();
  ExperimentConfig cfg;
  cfg.loads = {3, 9};
  cfg.samples_per_load = 3;
  cfg.verify = true;
  EXPECT_EQ(run_experiment(t, cfg).size(), 6u);
}

TEST(RunExperiment, BadParameters) {
  Topology t = Cost239();
  ExperimentConfig cfg;
  cfg.loads = {};
  EXPECT_THROW(run_experiment(t, cfg), ParameterError);
  cfg.loads = {10};
  EXPECT_THROW(run_experiment(t, cfg), ParameterError);
}

TEST(RunExperiment, WritesCsvAndReportsIoErrors) {
  const auto dir = std::filesystem::temp_directory_path() / "optagg_experiment_test";
  std::filesystem::create_directories(dir);
  ExperimentConfig cfg;
  cfg.topology_path = testing::DataPath("cost239.txt");
  cfg.samples_per_load = 2;
  cfg.output_path = dir / "out.csv";
  auto records = run_experiment(cfg);
  EXPECT_EQ(testing::ReadFile(cfg.output_path.string()), records_to_csv(records));

  cfg.output_path = dir / "missing" / "out.csv";
  EXPECT_THROW(run_experiment(cfg), IoError);
  cfg.output_path.clear();
  cfg.topology_path = dir / "no_such_topology.txt";
  EXPECT_THROW(run_experiment(cfg), IoError);
  std::filesystem::remove_all(dir);
}

TEST(RecordsToCsv, Format) {
  std::vector<ExperimentRecord> records = {Record(5, 0, 12, 9), Record(5, 1, 3, 2)};
  records[0].seed = 17;
  EXPECT_EQ(records_to_csv(records),
            "load,sample,seed,cost_conventional,cost_aggregation,gain\n"
            "5,0,17,12,9,0.250000\n"
            "5,1,0,3,2,0.333333\n");
}

TEST(Summarize, SingleRecord) {
  std::vector<ExperimentRecord> records = {Record(5, 0, 12, 9)};
  auto rows = summarize(records);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].mean_gain, Rational(1, 4));
  EXPECT_EQ(rows[0].min_gain, Rational(1, 4));
  EXPECT_EQ(rows[0].max_gain, Rational(1, 4));
  EXPECT_EQ(format_summary(rows),
            "load,samples,mean_gain,min_gain,max_gain\n5,1,0.2500,0.2500,0.2500\n");
}

TEST(Summarize, GroupsByLoad) {
  std::vector<ExperimentRecord> records = {Record(9, 0, 10, 8), Record(5, 0, 10, 10),
                                           Record(5, 1, 10, 7), Record(7, 0, 4, 3)};
  auto rows = summarize(records);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].load, 5u);
  EXPECT_EQ(rows[0].samples, 2u);
  EXPECT_EQ(rows[0].mean_gain, Rational(3, 20));
  EXPECT_EQ(rows[0].min_gain, Rational(0));
  EXPECT_EQ(rows[0].max_gain, Rational(3, 10));
  EXPECT_EQ(rows[1].load, 7u);
  EXPECT_EQ(rows[2].load, 9u);
  EXPECT_EQ(rows[2].mean_gain, Rational(1, 5));
}

TEST(Summarize, EmptyRejected) {
  EXPECT_THROW(summarize(std::vector<ExperimentRecord>{}), ParameterError);
}

}  // namespace
}  // namespace optagg
