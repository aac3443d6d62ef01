#ifndef OPTAGG_PLAN_JSON_H_
#define OPTAGG_PLAN_JSON_H_

#include <string>
#include <string_view>

#include <json.hpp>

#include "optagg/agg_solver.h"
#include "optagg/traffic.h"

namespace optagg {

// {"demands": [{"demand", "source", "dest", "route", "partner", "agg_node",
//   "shared_segment"}, ...], "total_cost": N}
// Field order is fixed; absent values are null.
nlohmann::ordered_json plan_to_json(const AggregationPlan& plan);
std::string serialize_plan(const AggregationPlan& plan);

// Reads a plan back and checks that its records match `demands` one to one.
// total_cost is kept as written. Throws ParseError on malformed documents
// and ValidationError on records that disagree with the demand set.
AggregationPlan parse_plan(std::string_view text, const DemandSet& demands);

}  // namespace optagg

#endif  // OPTAGG_PLAN_JSON_H_
