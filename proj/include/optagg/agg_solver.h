#ifndef OPTAGG_AGG_SOLVER_H_
#define OPTAGG_AGG_SOLVER_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "optagg/ilp_model.h"
#include "optagg/topology.h"
#include "optagg/traffic.h"

namespace optagg {

// Largest destination group the exact pairing search accepts.
inline constexpr std::size_t kMaxGroupSize = 12;

// Cheapest way to merge two demands bound for the same destination t:
// cost = dist(s1, v) + dist(s2, v) + dist(v, t) minimised over v != t.
struct PairPrice {
  std::size_t first = 0;
  std::size_t second = 0;
  NodeId agg_node;
  int cost = 0;
  // Singleton cost of both demands minus `cost`; may be negative.
  int saving = 0;
};

// Ties on cost go to the smallest node id. Throws ContractError unless the
// demands are distinct and share a destination.
PairPrice price_pair(const DistanceMatrix& distances, const Demand& first, const Demand& second);

struct DemandRoute {
  Demand demand;
  Path route;
  std::optional<std::size_t> partner;
  std::optional<NodeId> agg_node;
  // agg_node -> destination suffix of `route`, identical for both partners.
  std::optional<Path> shared_segment;
};

// One route per demand, indexed by demand id.
struct AggregationPlan {
  std::vector<DemandRoute> routes;
  std::int64_t total_cost = 0;
};

// Wavelength links used: every route link, with each pair's shared segment
// counted once.
std::int64_t plan_cost(const AggregationPlan& plan);

// Structural problems of a plan (partner involution, shared destination,
// shared segment placement, total_cost bookkeeping). Empty when consistent.
std::vector<std::string> check_plan(const AggregationPlan& plan);

// Exact optimum of the aggregation-aware routing model. Demands are grouped
// by destination and each group is paired by a subset search; pairs that
// save nothing stay apart. Throws CapacityError for groups larger than
// kMaxGroupSize.
AggregationPlan solve(const Topology& topology, const DemandSet& demands);

// Every demand on its shortest path, nothing aggregated.
AggregationPlan conventional_solve(const Topology& topology, const DemandSet& demands);

// x on route arcs; for paired demands theta at agg_node, f towards the
// partner and z on the shared segment. Throws EncodingError when the plan
// cannot be expressed in the model's variables.
Assignment encode(const AggregationPlan& plan, const IlpModel& model);

}  // namespace optagg

#endif  // OPTAGG_AGG_SOLVER_H_
