#include "optagg/oracle.h"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "optagg/errors.h"
#include "optagg/ilp_model.h"

namespace optagg {
namespace {

constexpr std::int64_t kUnreachable = std::numeric_limits<std::int64_t>::max() / 4;

// Every simple path between every ordered node pair, up to max_len hops.
class PathCatalog {
 public:
  PathCatalog(const Topology& topology, std::size_t max_len) {
    for (NodeId from : topology.nodes()) {
      Path current{from};
      std::set<NodeId> visited{from};
      Extend(topology, max_len, current, visited);
    }
  }

  const std::vector<Path>& between(NodeId from, NodeId to) const {
    static const std::vector<Path> kNone;
    auto it = paths_.find({from, to});
    return it == paths_.end() ? kNone : it->second;
  }

 private:
  void Extend(const Topology& topology, std::size_t max_len, Path& current,
              std::set<NodeId>& visited) {
    paths_[{current.front(), current.back()}].push_back(current);
    if (current.size() - 1 == max_len) return;
    for (NodeId next : topology.neighbors(current.back())) {
      if (visited.count(next)) continue;
      visited.insert(next);
      current.push_back(next);
      Extend(topology, max_len, current, visited);
      current.pop_back();
      visited.erase(next);
    }
  }

  std::map<std::pair<NodeId, NodeId>, std::vector<Path>> paths_;
};

std::int64_t Length(const Path& p) { return static_cast<std::int64_t>(p.size()) - 1; }

// Only the aggregation node may be common to a feeder and the merged leg.
bool MeetsOnlyAt(const Path& feeder, const Path& merged) {
  for (std::size_t i = 0; i + 1 < feeder.size(); ++i) {
    if (std::find(merged.begin(), merged.end(), feeder[i]) != merged.end()) return false;
  }
  return true;
}

struct SingleChoice {
  std::int64_t cost = kUnreachable;
  Path route;
};

struct PairChoice {
  std::int64_t cost = kUnreachable;
  NodeId agg_node;
  Path first_feeder;
  Path second_feeder;
  Path merged;
};

SingleChoice BestSingle(const PathCatalog& catalog, const Demand& d) {
  SingleChoice best;
  for (const Path& p : catalog.between(d.source, d.dest)) {
    if (Length(p) < best.cost) best = {Length(p), p};
  }
  return best;
}

PairChoice BestPair(const PathCatalog& catalog, const Topology& topology, const Demand& a,
                    const Demand& b) {
  PairChoice best;
  for (NodeId v : topology.nodes()) {
    if (v == a.dest) continue;
    for (const Path& merged : catalog.between(v, a.dest)) {
      for (const Path& pa : catalog.between(a.source, v)) {
        if (!MeetsOnlyAt(pa, merged)) continue;
        for (const Path& pb : catalog.between(b.source, v)) {
          if (!MeetsOnlyAt(pb, merged)) continue;
          const std::int64_t cost = Length(pa) + Length(pb) + Length(merged);
          if (cost < best.cost) best = {cost, v, pa, pb, merged};
        }
      }
    }
  }
  return best;
}

// One way of splitting a destination group: list of (i, j) with j == i for
// singletons.
using Partition = std::vector<std::pair<std::size_t, std::size_t>>;

void EnumeratePartitions(std::vector<std::size_t> remaining, Partition& current,
                         std::vector<Partition>& out) {
  if (remaining.empty()) {
    out.push_back(current);
    return;
  }
  const std::size_t first = remaining.front();
  std::vector<std::size_t> rest(remaining.begin() + 1, remaining.end());
  current.emplace_back(first, first);
  EnumeratePartitions(rest, current, out);
  current.pop_back();
  for (std::size_t k = 0; k < rest.size(); ++k) {
    std::vector<std::size_t> without = rest;
    without.erase(without.begin() + static_cast<std::ptrdiff_t>(k));
    current.emplace_back(first, rest[k]);
    EnumeratePartitions(without, current, out);
    current.pop_back();
  }
}

Path Join(const Path& feeder, const Path& merged) {
  Path route = feeder;
  route.insert(route.end(), merged.begin() + 1, merged.end());
  return route;
}

}  // namespace

OracleResult brute_force_optimum(const Topology& topology, const DemandSet& demands,
                                 const OracleLimits& limits) {
  if (topology.num_nodes() > limits.max_nodes || demands.size() > limits.max_demands) {
    throw CapacityError("oracle limited to " + std::to_string(limits.max_nodes) + " nodes and " +
                        std::to_string(limits.max_demands) + " demands");
  }
  const std::size_t max_len = limits.max_path_len.value_or(topology.num_nodes() - 1);
  const PathCatalog catalog(topology, max_len);

  std::vector<NodeId> destinations;
  for (const Demand& d : demands.demands()) destinations.push_back(d.dest);
  std::sort(destinations.begin(), destinations.end());
  destinations.erase(std::unique(destinations.begin(), destinations.end()), destinations.end());

  OracleResult result;
  result.witness.routes.resize(demands.size());
  for (NodeId t : destinations) {
    std::vector<std::size_t> group;
    for (const Demand& d : demands.demands()) {
      if (d.dest == t) group.push_back(d.id);
    }
    std::vector<Partition> partitions;
    Partition scratch;
    EnumeratePartitions(group, scratch, partitions);

    std::map<std::size_t, SingleChoice> singles;
    std::map<std::pair<std::size_t, std::size_t>, PairChoice> pairs;
    std::int64_t best_cost = kUnreachable;
    const Partition* best = nullptr;
    for (const Partition& partition : partitions) {
      std::int64_t cost = 0;
      for (const auto& [i, j] : partition) {
        if (i == j) {
          if (!singles.count(i)) singles[i] = BestSingle(catalog, demands[i]);
          cost += singles[i].cost;
        } else {
          if (!pairs.count({i, j})) pairs[{i, j}] = BestPair(catalog, topology, demands[i], demands[j]);
          cost += pairs[{i, j}].cost;
        }
      }
      if (cost < best_cost) {
        best_cost = cost;
        best = &partition;
      }
    }
    if (best == nullptr || best_cost >= kUnreachable) {
      throw CapacityError("max_path_len too small to route destination " +
                          std::to_string(t.value));
    }
    result.cost += best_cost;

    for (const auto& [i, j] : *best) {
      if (i == j) {
        result.witness.routes[i] = {demands[i], singles[i].route, {}, {}, {}};
        continue;
      }
      const PairChoice& p = pairs[{i, j}];
      result.witness.routes[i] = {demands[i], Join(p.first_feeder, p.merged), j, p.agg_node, p.merged};
      result.witness.routes[j] = {demands[j], Join(p.second_feeder, p.merged), i, p.agg_node, p.merged};
    }
  }
  result.witness.total_cost = result.cost;
  return result;
}

SmallInstance random_small_instance(std::uint64_t seed, std::size_t max_nodes,
                                   std::size_t max_demands) {
  if (max_nodes < 3 || max_demands < 2) {
    throw ParameterError("small instances need at least 3 nodes and 2 demands");
  }
  SeededRng rng(seed);
  const std::size_t n = 3 + static_cast<std::size_t>(rng.below(max_nodes - 2));

  std::vector<NodeId> labels;
  for (std::uint32_t v = 1; v <= 2 * max_nodes; ++v) labels.push_back(NodeId{v});
  for (std::size_t i = 0; i < n; ++i) {
    std::swap(labels[i], labels[i + rng.below(labels.size() - i)]);
  }
  labels.resize(n);

  std::vector<Link> links;
  for (std::size_t i = 1; i < n; ++i) links.emplace_back(labels[i], labels[rng.below(i)]);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng.below(3) == 0) links.emplace_back(labels[i], labels[j]);
    }
  }
  Topology topology = Topology::FromLinks(links, "random-" + std::to_string(seed));

  const std::size_t wanted =
      std::min<std::size_t>(2 + rng.below(max_demands - 1), n * (n - 1));
  std::vector<Link> pairs;
  const NodeId t = labels[rng.below(n)];
  std::vector<NodeId> others;
  for (NodeId v : labels) {
    if (v != t) others.push_back(v);
  }
  std::swap(others[0], others[rng.below(others.size())]);
  std::swap(others[1], others[1 + rng.below(others.size() - 1)]);
  pairs.emplace_back(others[0], t);
  pairs.emplace_back(others[1], t);
  while (pairs.size() < wanted) {
    const NodeId s = labels[rng.below(n)];
    const NodeId d = labels[rng.below(n)];
    if (s == d || std::find(pairs.begin(), pairs.end(), Link{s, d}) != pairs.end()) continue;
    pairs.emplace_back(s, d);
  }
  DemandSet demands = DemandSet::FromPairs(topology, pairs, seed);
  return {std::move(topology), std::move(demands), seed};
}

OracleCheckReport run_oracle_check(std::size_t count, std::uint64_t base_seed) {
  OracleCheckReport report;
  for (std::size_t k = 0; k < count; ++k) {
    const std::uint64_t seed = mix_seed(base_seed + k);
    const SmallInstance inst = random_small_instance(seed);
    ++report.instances;
    auto fail = [&](const std::string& what) {
      report.failures.push_back("seed " + std::to_string(seed) + ": " + what);
    };

    const AggregationPlan plan = solve(inst.topology, inst.demands);
    const OracleResult oracle = brute_force_optimum(inst.topology, inst.demands);
    if (plan.total_cost != oracle.cost) {
      fail("solver cost " + std::to_string(plan.total_cost) + " != oracle cost " +
           std::to_string(oracle.cost));
    }
    const IlpModel model = build_ilp(inst.topology, inst.demands);
    for (const auto* candidate : {&plan, &oracle.witness}) {
      const char* who = candidate == &plan ? "solver plan" : "oracle witness";
      for (const std::string& problem : check_plan(*candidate)) fail(std::string(who) + ": " + problem);
      const Assignment a = encode(*candidate, model);
      const auto violations = validate_assignment(model, a);
      if (!violations.empty()) {
        std::ostringstream msg;
        msg << who << " violates " << violations.size() << " rows, first " << violations.front();
        fail(msg.str());
      }
      if (objective_value(model, a) != Rational(candidate->total_cost)) {
        fail(std::string(who) + " objective differs from its total cost");
      }
    }
  }
  return report;
}

}  // namespace optagg
