#include "optagg/traffic.h"

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>

#include "optagg/errors.h"
#include "test_util.h"

namespace optagg {
namespace {

using testing::Cost239;

TEST(GenerateTwoToMany, FiveDestinationsGiveTenDemands) {
  Topology t = Cost239();
  DemandSet d = generate_two_to_many(t, 5, 42);
  ASSERT_EQ(d.size(), 10u);
  EXPECT_EQ(d.seed(), std::optional<std::uint64_t>(42));
  // Source-major: first five from one source, last five from the other.
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_EQ(d[i].source, d[0].source);
    EXPECT_EQ(d[i + 5].source, d[5].source);
    EXPECT_EQ(d[i].dest, d[i + 5].dest);
  }
  EXPECT_NE(d[0].source, d[5].source);
}

TEST(GenerateTwoToMany, ZeroDestinations) {
  EXPECT_TRUE(generate_two_to_many(Cost239(), 0, 7).empty());
}

TEST(GenerateTwoToMany, SameSeedSameDemands) {
  Topology t = Cost239();
  EXPECT_EQ(generate_two_to_many(t, 7, 123), generate_two_to_many(t, 7, 123));
}

TEST(GenerateTwoToMany, TooManyDestinations) {
  Topology t = Cost239();
  EXPECT_NO_THROW(generate_two_to_many(t, 9, 1));
  EXPECT_THROW(generate_two_to_many(t, 10, 1), ParameterError);
}

TEST(GenerateTwoToMany, StructureHoldsForManySeeds) {
  Topology t = Cost239();
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const std::size_t n_dest = seed % 10;
    DemandSet d = generate_two_to_many(t, n_dest, seed);
    ASSERT_EQ(d.size(), 2 * n_dest);
    std::set<NodeId> sources;
    std::set<NodeId> dests;
    for (const Demand& dem : d.demands()) {
      sources.insert(dem.source);
      dests.insert(dem.dest);
    }
    if (n_dest == 0) continue;
    EXPECT_EQ(sources.size(), 2u);
    EXPECT_EQ(dests.size(), n_dest);
    for (NodeId s : sources) EXPECT_EQ(dests.count(s), 0u);
  }
}

TEST(GenerateTwoToMany, SourcesAreUniform) {
  Topology t = Cost239();
  const int samples = 22000;
  std::map<NodeId, int> hits;
  for (int seed = 0; seed < samples; ++seed) {
    DemandSet d = generate_two_to_many(t, 3, static_cast<std::uint64_t>(seed));
    ++hits[d[0].source];
    ++hits[d[3].source];
  }
  const double p = 2.0 / 11.0;
  const double mean = samples * p;
  const double sigma = std::sqrt(samples * p * (1 - p));
  for (NodeId v : t.nodes()) {
    EXPECT_NEAR(hits[v], mean, 3 * sigma) << "node " << v;
  }
}

TEST(SeededRng, BoundedDraws) {
  SeededRng rng(99);
  for (int i = 0; i < 1000; ++i) EXPECT_EQ(rng.below(1), 0u);
  for (int i = 0; i < 1000; ++i) EXPECT_LT(rng.below(7), 7u);
  const std::uint64_t huge = (std::uint64_t{1} << 63) + 5;
  for (int i = 0; i < 1000; ++i) EXPECT_LT(rng.below(huge), huge);
  EXPECT_THROW(rng.below(0), ContractError);
}

TEST(ParseDemands, SharedDestination) {
  DemandSet d = parse_demands("7,2\n9,2", Cost239());
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0].source, NodeId{7});
  EXPECT_EQ(d[1].source, NodeId{9});
  EXPECT_EQ(d[0].dest, d[1].dest);
  EXPECT_EQ(d[1].id, 1u);
}

TEST(ParseDemands, EmptyAndCommentOnly) {
  EXPECT_TRUE(parse_demands("", Cost239()).empty());
  EXPECT_TRUE(parse_demands("# header\n\n", Cost239()).empty());
}

TEST(ParseDemands, Errors) {
  Topology t = Cost239();
  EXPECT_THROW(parse_demands("7,7", t), ValidationError);
  EXPECT_THROW(parse_demands("7,42", t), ValidationError);
  EXPECT_THROW(parse_demands("7,2\n7,2", t), ValidationError);
  EXPECT_THROW(parse_demands("7;2", t), ParseError);
  EXPECT_THROW(parse_demands("7,2,3", t), ParseError);
  EXPECT_THROW(parse_demands("7,x", t), ParseError);
}

TEST(ParseDemands, RoundTripsThroughSerialize) {
  Topology t = Cost239();
  DemandSet d = generate_two_to_many(t, 6, 5);
  DemandSet again = parse_demands(serialize_demands(d), t);
  EXPECT_TRUE(std::ranges::equal(again.demands(), d.demands()));
}

TEST(ParseDemands, FixtureFile) {
  Topology t = Cost239();
  DemandSet d = testing::FixtureDemands(t);
  ASSERT_EQ(d.size(), 10u);
  EXPECT_EQ(d[0].source, NodeId{7});
  EXPECT_EQ(d[0].dest, NodeId{2});
  EXPECT_EQ(d[9].source, NodeId{9});
  EXPECT_EQ(d[9].dest, NodeId{1});
  EXPECT_THROW(load_demands("/nonexistent/demands.csv", t), IoError);
}

}  // namespace
}  // namespace optagg
