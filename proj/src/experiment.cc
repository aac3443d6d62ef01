#include "optagg/experiment.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "optagg/agg_solver.h"
#include "optagg/errors.h"
#include "optagg/ilp_model.h"
#include "optagg/traffic.h"

namespace optagg {
namespace {

void VerifyPlan(const Topology& topology, const DemandSet& demands, const AggregationPlan& plan,
                const std::string& label) {
  const IlpModel model = build_ilp(topology, demands);
  const Assignment a = encode(plan, model);
  const auto violations = validate_assignment(model, a);
  if (!violations.empty()) {
    std::ostringstream msg;
    msg << label << ": " << violations.size() << " violated rows, first " << violations.front();
    throw ValidationError(msg.str());
  }
  if (objective_value(model, a) != Rational(plan.total_cost)) {
    throw ValidationError(label + ": model objective differs from plan cost");
  }
}

}  // namespace

std::uint64_t sample_seed(std::uint64_t base_seed, std::size_t load, std::size_t sample) {
  std::uint64_t h = mix_seed(base_seed);
  h = mix_seed(h ^ static_cast<std::uint64_t>(load));
  return mix_seed(h ^ static_cast<std::uint64_t>(sample));
}

std::vector<ExperimentRecord> run_experiment(const Topology& topology,
                                             const ExperimentConfig& config) {
  if (config.loads.empty()) throw ParameterError("at least one load is required");
  for (std::size_t load : config.loads) {
    if (load + 2 > topology.num_nodes()) {
      throw ParameterError("load " + std::to_string(load) + " exceeds |V| - 2 = " +
                           std::to_string(topology.num_nodes() - 2));
    }
  }
  std::vector<std::size_t> loads = config.loads;
  std::sort(loads.begin(), loads.end());
  loads.erase(std::unique(loads.begin(), loads.end()), loads.end());

  std::vector<ExperimentRecord> records;
  for (std::size_t load : loads) {
    for (std::size_t sample = 0; sample < config.samples_per_load; ++sample) {
      const std::uint64_t seed = sample_seed(config.base_seed, load, sample);
      const DemandSet demands = generate_two_to_many(topology, load, seed);
      ExperimentRecord rec{load, sample, seed, 0, 0, 0};
      if (!demands.empty()) {
        const AggregationPlan conventional = conventional_solve(topology, demands);
        const AggregationPlan aggregated = solve(topology, demands);
        if (config.verify) {
          const std::string where =
              "load " + std::to_string(load) + " sample " + std::to_string(sample);
          VerifyPlan(topology, demands, conventional, where + " conventional");
          VerifyPlan(topology, demands, aggregated, where + " aggregation");
        }
        rec.cost_conventional = conventional.total_cost;
        rec.cost_aggregation = aggregated.total_cost;
        rec.gain = Rational(rec.cost_conventional - rec.cost_aggregation, rec.cost_conventional);
      }
      records.push_back(rec);
    }
  }
  return records;
}

std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& config) {
  const Topology topology = load_topology(config.topology_path);
  std::vector<ExperimentRecord> records = run_experiment(topology, config);
  if (!config.output_path.empty()) {
    std::ofstream out(config.output_path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write results to " + config.output_path.string());
    out << records_to_csv(records);
    if (!out.flush()) throw IoError("failed writing results to " + config.output_path.string());
  }
  return records;
}

std::string records_to_csv(std::span<const ExperimentRecord> records) {
  std::ostringstream out;
  out << "load,sample,seed,cost_conventional,cost_aggregation,gain\n";
  for (const ExperimentRecord& r : records) {
    out << r.load << ',' << r.sample << ',' << r.seed << ',' << r.cost_conventional << ','
        << r.cost_aggregation << ',' << format_fixed(r.gain, 6) << '\n';
  }
  return out.str();
}

std::vector<LoadSummary> summarize(std::span<const ExperimentRecord> records) {
  if (records.empty()) throw ParameterError("cannot summarize an empty record list");
  std::map<std::size_t, LoadSummary> by_load;
  for (const ExperimentRecord& r : records) {
    auto [it, fresh] = by_load.try_emplace(r.load, LoadSummary{r.load, 0, 0, r.gain, r.gain});
    LoadSummary& s = it->second;
    ++s.samples;
    s.mean_gain += r.gain;
    s.min_gain = std::min(s.min_gain, r.gain);
    s.max_gain = std::max(s.max_gain, r.gain);
  }
  std::vector<LoadSummary> rows;
  for (auto& [load, s] : by_load) {
    s.mean_gain /= static_cast<std::int64_t>(s.samples);
    rows.push_back(s);
  }
  return rows;
}

std::string format_summary(std::span<const LoadSummary> rows) {
  std::ostringstream out;
  out << "load,samples,mean_gain,min_gain,max_gain\n";
  for (const LoadSummary& s : rows) {
    out << s.load << ',' << s.samples << ',' << format_fixed(s.mean_gain, 4) << ','
        << format_fixed(s.min_gain, 4) << ',' << format_fixed(s.max_gain, 4) << '\n';
  }
  return out.str();
}

}  // namespace optagg
