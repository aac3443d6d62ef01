#ifndef OPTAGG_ORACLE_H_
#define OPTAGG_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "optagg/agg_solver.h"
#include "optagg/topology.h"
#include "optagg/traffic.h"

namespace optagg {

struct OracleLimits {
  std::size_t max_nodes = 6;
  std::size_t max_demands = 6;
  // Longest simple path enumerated, in hops; |V| - 1 when unset.
  std::optional<std::size_t> max_path_len;
};

struct OracleResult {
  std::int64_t cost = 0;
  AggregationPlan witness;
};

// Exhaustive minimum of the wavelength-link cost. Every destination group is
// split into pairs and singletons in all possible ways; each pair tries every
// aggregation node and every combination of simple paths for its three
// segments. Shares no search code with solve(). Throws CapacityError outside
// the limits.
OracleResult brute_force_optimum(const Topology& topology, const DemandSet& demands,
                                 const OracleLimits& limits = {});

// Random connected graph on 3..max_nodes nodes with non-contiguous labels and
// 2..max_demands demands, at least two of them sharing a destination.
struct SmallInstance {
  Topology topology;
  DemandSet demands;
  std::uint64_t seed = 0;
};
SmallInstance random_small_instance(std::uint64_t seed, std::size_t max_nodes = 6,
                                   std::size_t max_demands = 6);

struct OracleCheckReport {
  std::size_t instances = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

// For `count` seeded instances: solver cost equals the oracle optimum, and
// both the solver plan and the oracle witness validate against the model
// with matching objective.
OracleCheckReport run_oracle_check(std::size_t count, std::uint64_t base_seed);

}  // namespace optagg

#endif  // OPTAGG_ORACLE_H_
