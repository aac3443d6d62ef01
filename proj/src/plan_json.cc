#include "optagg/plan_json.h"

#include "optagg/errors.h"

namespace optagg {
namespace {

using nlohmann::ordered_json;

ordered_json PathJson(const Path& path) {
  ordered_json arr = ordered_json::array();
  for (NodeId v : path) arr.push_back(v.value);
  return arr;
}

Path PathFrom(const ordered_json& j) {
  Path p;
  for (const auto& v : j) p.push_back(NodeId{v.get<std::uint32_t>()});
  return p;
}

}  // namespace

ordered_json plan_to_json(const AggregationPlan& plan) {
  ordered_json records = ordered_json::array();
  for (const DemandRoute& r : plan.routes) {
    ordered_json rec;
    rec["demand"] = r.demand.id;
    rec["source"] = r.demand.source.value;
    rec["dest"] = r.demand.dest.value;
    rec["route"] = PathJson(r.route);
    rec["partner"] = r.partner ? ordered_json(*r.partner) : ordered_json(nullptr);
    rec["agg_node"] = r.agg_node ? ordered_json(r.agg_node->value) : ordered_json(nullptr);
    rec["shared_segment"] =
        r.shared_segment ? PathJson(*r.shared_segment) : ordered_json(nullptr);
    records.push_back(std::move(rec));
  }
  ordered_json doc;
  doc["demands"] = std::move(records);
  doc["total_cost"] = plan.total_cost;
  return doc;
}

std::string serialize_plan(const AggregationPlan& plan) {
  return plan_to_json(plan).dump(2) + "\n";
}

AggregationPlan parse_plan(std::string_view text, const DemandSet& demands) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw ParseError(0, std::string("plan is not valid JSON: ") + e.what());
  }

  AggregationPlan plan;
  try {
    const auto& records = doc.at("demands");
    if (!records.is_array()) throw ParseError(0, "\"demands\" must be an array");
    if (records.size() != demands.size()) {
      throw ValidationError("plan has " + std::to_string(records.size()) +
                            " records for " + std::to_string(demands.size()) + " demands");
    }
    for (std::size_t i = 0; i < records.size(); ++i) {
      const auto& rec = records[i];
      const Demand& d = demands[i];
      if (rec.at("demand").get<std::size_t>() != d.id ||
          rec.at("source").get<std::uint32_t>() != d.source.value ||
          rec.at("dest").get<std::uint32_t>() != d.dest.value) {
        throw ValidationError("plan record " + std::to_string(i) +
                              " does not match demand " + std::to_string(d.source.value) +
                              "," + std::to_string(d.dest.value));
      }
      DemandRoute r{d, PathFrom(rec.at("route")), {}, {}, {}};
      if (!rec.at("partner").is_null()) r.partner = rec["partner"].get<std::size_t>();
      if (!rec.at("agg_node").is_null()) r.agg_node = NodeId{rec["agg_node"].get<std::uint32_t>()};
      if (!rec.at("shared_segment").is_null()) r.shared_segment = PathFrom(rec["shared_segment"]);
      plan.routes.push_back(std::move(r));
    }
    plan.total_cost = doc.at("total_cost").get<std::int64_t>();
  } catch (const ordered_json::exception& e) {
    throw ParseError(0, std::string("malformed plan: ") + e.what());
  }
  return plan;
}

}  // namespace optagg
