#include "optagg/plan_json.h"

#include <gtest/gtest.h>

#include "optagg/errors.h"
#include "test_util.h"

namespace optagg {
namespace {

using testing::Cost239;

void ExpectSamePlan(const AggregationPlan& a, const AggregationPlan& b) {
  ASSERT_EQ(a.routes.size(), b.routes.size());
  EXPECT_EQ(a.total_cost, b.total_cost);
  for (std::size_t i = 0; i < a.routes.size(); ++i) {
    EXPECT_EQ(a.routes[i].demand, b.routes[i].demand);
    EXPECT_EQ(a.routes[i].route, b.routes[i].route);
    EXPECT_EQ(a.routes[i].partner, b.routes[i].partner);
    EXPECT_EQ(a.routes[i].agg_node, b.routes[i].agg_node);
    EXPECT_EQ(a.routes[i].shared_segment, b.routes[i].shared_segment);
  }
}

TEST(PlanJson, RoundTripAggregated) {
  Topology t = Cost239();
  DemandSet d = testing::FixtureDemands(t);
  AggregationPlan plan = solve(t, d);
  const std::string text = serialize_plan(plan);
  ExpectSamePlan(parse_plan(text, d), plan);
  EXPECT_EQ(serialize_plan(parse_plan(text, d)), text);
}

TEST(PlanJson, ConventionalRecordsUseNull) {
  Topology t = Cost239();
  DemandSet d = testing::FixtureDemands(t);
  AggregationPlan plan = conventional_solve(t, d);
  auto j = plan_to_json(plan);
  EXPECT_EQ(j["total_cost"], 18);
  const auto& first = j["demands"][0];
  EXPECT_TRUE(first["partner"].is_null());
  EXPECT_TRUE(first["agg_node"].is_null());
  EXPECT_TRUE(first["shared_segment"].is_null());
  std::vector<std::string> keys;
  for (const auto& [k, v] : first.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"demand", "source", "dest", "route", "partner",
                                            "agg_node", "shared_segment"}));
  ExpectSamePlan(parse_plan(serialize_plan(plan), d), plan);
}

TEST(PlanJson, AggregatedRecordFields) {
  Topology t = Cost239();
  DemandSet d = testing::FixtureDemands(t);
  auto j = plan_to_json(solve(t, d));
  const auto& r = j["demands"][5];
  EXPECT_EQ(r["source"], 9);
  EXPECT_EQ(r["dest"], 2);
  EXPECT_EQ(r["route"], nlohmann::json({9, 7, 1, 2}));
  EXPECT_EQ(r["partner"], 0);
  EXPECT_EQ(r["agg_node"], 7);
  EXPECT_EQ(r["shared_segment"], nlohmann::json({7, 1, 2}));
}

TEST(PlanJson, MalformedDocuments) {
  Topology t = Cost239();
  DemandSet d = testing::FixtureDemands(t);
  EXPECT_THROW(parse_plan("{not json", d), ParseError);
  EXPECT_THROW(parse_plan("[]", d), ParseError);
  EXPECT_THROW(parse_plan(R"({"demands": 3, "total_cost": 0})", d), ParseError);
  auto j = plan_to_json(solve(t, d));
  j["demands"][0]["route"] = "7-1-2";
  EXPECT_THROW(parse_plan(j.dump(), d), ParseError);
}

TEST(PlanJson, RecordsMustMatchDemands) {
  Topology t = Cost239();
  DemandSet d = testing::FixtureDemands(t);
  auto good = plan_to_json(solve(t, d));

  auto j = good;
  j["demands"].erase(j["demands"].size() - 1);
  EXPECT_THROW(parse_plan(j.dump(), d), ValidationError);

  j = good;
  j["demands"][3]["source"] = 9;
  EXPECT_THROW(parse_plan(j.dump(), d), ValidationError);

  j = good;
  j["demands"][3]["dest"] = 4;
  EXPECT_THROW(parse_plan(j.dump(), d), ValidationError);

  j = good;
  std::swap(j["demands"][0], j["demands"][1]);
  EXPECT_THROW(parse_plan(j.dump(), d), ValidationError);
}

}  // namespace
}  // namespace optagg
