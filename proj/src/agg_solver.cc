#include "optagg/agg_solver.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <set>

#include "optagg/errors.h"

namespace optagg {
namespace {

std::int64_t Hops(const Path& p) { return p.empty() ? 0 : static_cast<std::int64_t>(p.size()) - 1; }

std::string Id(std::size_t d) { return "demand " + std::to_string(d); }

// Best pairing of one destination group: partner[i] is the group-local
// partner index or -1.
std::vector<int> PairGroup(const std::vector<int>& singles,
                           const std::vector<std::vector<PairPrice>>& prices) {
  const std::size_t k = singles.size();
  const std::size_t states = std::size_t{1} << k;
  std::vector<int> best(states, 0);
  std::vector<int> choice(states, -1);
  for (std::size_t mask = 1; mask < states; ++mask) {
    const int i = std::countr_zero(mask);
    const std::size_t rest = mask & ~(std::size_t{1} << i);
    best[mask] = best[rest] + singles[i];
    choice[mask] = -1;
    for (std::size_t j = i + 1; j < k; ++j) {
      if (!(rest & (std::size_t{1} << j))) continue;
      const PairPrice& p = prices[i][j];
      if (p.saving <= 0) continue;
      const int candidate = best[rest & ~(std::size_t{1} << j)] + p.cost;
      if (candidate < best[mask]) {
        best[mask] = candidate;
        choice[mask] = static_cast<int>(j);
      }
    }
  }
  std::vector<int> partner(k, -1);
  std::size_t mask = states - 1;
  while (mask != 0) {
    const int i = std::countr_zero(mask);
    mask &= ~(std::size_t{1} << i);
    const int j = choice[mask | (std::size_t{1} << i)];
    if (j >= 0) {
      partner[i] = j;
      partner[j] = i;
      mask &= ~(std::size_t{1} << j);
    }
  }
  return partner;
}

Path Concat(Path head, const Path& tail) {
  head.insert(head.end(), tail.begin() + 1, tail.end());
  return head;
}

}  // namespace

PairPrice price_pair(const DistanceMatrix& distances, const Demand& first, const Demand& second) {
  if (first.dest != second.dest) {
    throw ContractError("price_pair needs demands with a common destination");
  }
  if (first.id == second.id) {
    throw ContractError("price_pair needs two distinct demands");
  }
  const NodeId t = first.dest;
  PairPrice best{first.id, second.id, NodeId{}, std::numeric_limits<int>::max(), 0};
  for (NodeId v : distances.nodes()) {
    if (v == t) continue;
    const int cost = distances(first.source, v) + distances(second.source, v) + distances(v, t);
    if (cost < best.cost) {
      best.cost = cost;
      best.agg_node = v;
    }
  }
  best.saving = distances(first.source, t) + distances(second.source, t) - best.cost;
  return best;
}

std::int64_t plan_cost(const AggregationPlan& plan) {
  std::int64_t total = 0;
  for (const DemandRoute& r : plan.routes) {
    total += Hops(r.route);
    if (r.partner && r.demand.id < *r.partner && r.shared_segment) {
      total -= Hops(*r.shared_segment);
    }
  }
  return total;
}

std::vector<std::string> check_plan(const AggregationPlan& plan) {
  std::vector<std::string> problems;
  const std::size_t n = plan.routes.size();
  for (std::size_t d = 0; d < n; ++d) {
    const DemandRoute& r = plan.routes[d];
    if (r.demand.id != d) {
      problems.push_back("record " + std::to_string(d) + " holds " + Id(r.demand.id));
      continue;
    }
    if (r.route.empty() || r.route.front() != r.demand.source || r.route.back() != r.demand.dest) {
      problems.push_back(Id(d) + ": route does not run from source to destination");
    }
    if (!r.partner) {
      if (r.agg_node || r.shared_segment) {
        problems.push_back(Id(d) + ": aggregation data without a partner");
      }
      continue;
    }
    const std::size_t p = *r.partner;
    if (p >= n || p == d) {
      problems.push_back(Id(d) + ": invalid partner " + std::to_string(p));
      continue;
    }
    const DemandRoute& other = plan.routes[p];
    if (other.partner != d) {
      problems.push_back(Id(d) + ": partner relation is not symmetric");
    }
    if (other.demand.dest != r.demand.dest) {
      problems.push_back(Id(d) + ": partner has a different destination");
    }
    if (!r.agg_node || !r.shared_segment) {
      problems.push_back(Id(d) + ": partner without aggregation node or shared segment");
      continue;
    }
    const Path& shared = *r.shared_segment;
    if (*r.agg_node == r.demand.dest) {
      problems.push_back(Id(d) + ": aggregation at the destination");
    }
    if (shared.empty() || shared.front() != *r.agg_node || shared.back() != r.demand.dest) {
      problems.push_back(Id(d) + ": shared segment does not run from aggregation node to destination");
    }
    if (shared.size() > r.route.size() ||
        !std::equal(shared.rbegin(), shared.rend(), r.route.rbegin())) {
      problems.push_back(Id(d) + ": shared segment is not a suffix of the route");
    }
    if (other.agg_node != r.agg_node || other.shared_segment != r.shared_segment) {
      problems.push_back(Id(d) + ": partners disagree on aggregation node or shared segment");
    }
  }
  if (plan.total_cost != plan_cost(plan)) {
    problems.push_back("total_cost " + std::to_string(plan.total_cost) + " differs from " +
                       std::to_string(plan_cost(plan)));
  }
  return problems;
}

AggregationPlan solve(const Topology& topology, const DemandSet& demands) {
  const DistanceMatrix dm = hop_distances(topology);
  std::map<NodeId, std::vector<std::size_t>> groups;
  for (const Demand& d : demands.demands()) groups[d.dest].push_back(d.id);
  for (const auto& [dest, members] : groups) {
    if (members.size() > kMaxGroupSize) {
      throw CapacityError(std::to_string(members.size()) + " demands share destination " +
                          std::to_string(dest.value) + " (limit " +
                          std::to_string(kMaxGroupSize) +
                          "); export the model with export-lp and use a MILP solver");
    }
  }

  AggregationPlan plan;
  plan.routes.resize(demands.size());
  for (const auto& [dest, members] : groups) {
    const std::size_t k = members.size();
    std::vector<int> singles(k);
    std::vector<std::vector<PairPrice>> prices(k, std::vector<PairPrice>(k));
    for (std::size_t i = 0; i < k; ++i) {
      const Demand& di = demands[members[i]];
      singles[i] = dm(di.source, di.dest);
      for (std::size_t j = i + 1; j < k; ++j) {
        prices[i][j] = price_pair(dm, di, demands[members[j]]);
      }
    }
    const std::vector<int> partner = PairGroup(singles, prices);

    for (std::size_t i = 0; i < k; ++i) {
      const Demand& di = demands[members[i]];
      DemandRoute& out = plan.routes[di.id];
      out.demand = di;
      if (partner[i] < 0) {
        out.route = shortest_path(topology, dm, di.source, di.dest);
        continue;
      }
      const std::size_t j = static_cast<std::size_t>(partner[i]);
      const PairPrice& price = i < j ? prices[i][j] : prices[j][i];
      Path shared = shortest_path(topology, dm, price.agg_node, dest);
      out.route = Concat(shortest_path(topology, dm, di.source, price.agg_node), shared);
      out.partner = members[j];
      out.agg_node = price.agg_node;
      out.shared_segment = std::move(shared);
    }
  }
  plan.total_cost = plan_cost(plan);
  return plan;
}

AggregationPlan conventional_solve(const Topology& topology, const DemandSet& demands) {
  const DistanceMatrix dm = hop_distances(topology);
  AggregationPlan plan;
  for (const Demand& d : demands.demands()) {
    plan.routes.push_back({d, shortest_path(topology, dm, d.source, d.dest), {}, {}, {}});
  }
  plan.total_cost = plan_cost(plan);
  return plan;
}

Assignment encode(const AggregationPlan& plan, const IlpModel& model) {
  std::set<std::size_t> model_demands;
  for (const VarRef& v : model.variables()) {
    if (v.kind == VarKind::kTheta) model_demands.insert(v.demand);
  }
  if (model_demands.size() != plan.routes.size()) {
    throw EncodingError("plan covers " + std::to_string(plan.routes.size()) +
                        " demands, model has " + std::to_string(model_demands.size()));
  }

  Assignment a = Assignment::Zeros(model);
  auto set_one = [&](const VarRef& var, const std::string& what) {
    if (!model.find(var)) {
      throw EncodingError(what + " has no variable " + variable_name(var) + " in the model");
    }
    a.set(var, true);
  };

  for (std::size_t d = 0; d < plan.routes.size(); ++d) {
    const DemandRoute& r = plan.routes[d];
    if (r.demand.id != d) {
      throw EncodingError("plan record " + std::to_string(d) + " holds " + Id(r.demand.id));
    }
    for (std::size_t k = 1; k < r.route.size(); ++k) {
      set_one(VarRef::X(d, {r.route[k - 1], r.route[k]}), Id(d) + " route");
    }
    if (!r.partner) {
      if (r.agg_node || r.shared_segment) {
        throw EncodingError(Id(d) + " has aggregation data but no partner");
      }
      continue;
    }
    if (!r.agg_node) throw EncodingError(Id(d) + " has a partner but no aggregation node");
    if (!r.shared_segment) throw EncodingError(Id(d) + " has a partner but no shared segment");
    if (*r.partner == d) throw EncodingError(Id(d) + " is paired with itself");

    set_one(VarRef::Theta(d, *r.agg_node), Id(d) + " aggregation node");
    set_one(VarRef::F(d, *r.partner), Id(d) + " partner");
    const Path& shared = *r.shared_segment;
    for (std::size_t k = 1; k < shared.size(); ++k) {
      set_one(VarRef::Z(d, *r.agg_node, {shared[k - 1], shared[k]}), Id(d) + " shared segment");
    }
  }
  return a;
}

}  // namespace optagg
