#ifndef OPTAGG_TESTS_TEST_UTIL_H_
#define OPTAGG_TESTS_TEST_UTIL_H_

#include <cstdint>
#include <string>
#include <vector>

#include <optional>

#include "optagg/ilp_model.h"
#include "optagg/topology.h"
#include "optagg/traffic.h"

namespace optagg::testing {

std::string DataPath(const std::string& file);
Topology Cost239();
DemandSet FixtureDemands(const Topology& cost239);

// Path graph 1 - 2 - ... - n.
Topology PathGraph(std::uint32_t n);

// Connected random graph on n nodes labelled 1..n: random spanning tree plus
// each remaining pair with probability 1/extra_one_in.
Topology RandomConnectedGraph(std::uint64_t seed, std::uint32_t n, std::uint32_t extra_one_in = 3);

DemandSet Demands(const Topology& t, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs);

std::string ReadFile(const std::string& path);

Path P(std::initializer_list<std::uint32_t> ids);

// One row of a printed routing table for the fixture instance.
struct TableRow {
  Path route;
  std::optional<std::uint32_t> agg_node;
  Path aggregation_links;  // agg_node -> destination
  std::optional<std::size_t> partner;
};

// Reference routings of the fixture demands, in file order
// 7->2, 7->11, 7->4, 7->3, 7->1, 9->2, 9->11, 9->4, 9->3, 9->1.
const std::vector<TableRow>& AggregatedReferenceRows();
const std::vector<TableRow>& ConventionalReferenceRows();

// Sets the model variables for the rows directly, without the solver's
// encoder.
Assignment EncodeRows(const IlpModel& m, const std::vector<TableRow>& rows);

}  // namespace optagg::testing

#endif  // OPTAGG_TESTS_TEST_UTIL_H_
