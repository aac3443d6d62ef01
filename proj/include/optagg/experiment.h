#ifndef OPTAGG_EXPERIMENT_H_
#define OPTAGG_EXPERIMENT_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "optagg/rational.h"
#include "optagg/topology.h"

namespace optagg {

inline constexpr std::uint64_t kDefaultBaseSeed = 239;

struct ExperimentConfig {
  std::filesystem::path topology_path;
  std::vector<std::size_t> loads{5, 7, 9};  // destination counts
  std::size_t samples_per_load = 10;
  std::uint64_t base_seed = kDefaultBaseSeed;
  std::filesystem::path output_path;  // CSV; skipped when empty
  // Re-check both plans of every sample against the routing model.
  bool verify = false;
};

struct ExperimentRecord {
  std::size_t load = 0;
  std::size_t sample = 0;
  std::uint64_t seed = 0;
  std::int64_t cost_conventional = 0;
  std::int64_t cost_aggregation = 0;
  Rational gain;  // (conventional - aggregation) / conventional
};

// mix(mix(mix(base) ^ load) ^ sample) with the SplitMix64 finalizer.
std::uint64_t sample_seed(std::uint64_t base_seed, std::size_t load, std::size_t sample);

// Records ordered by (load, sample). Throws ParameterError for empty or
// oversized loads and ValidationError when verification fails.
std::vector<ExperimentRecord> run_experiment(const Topology& topology,
                                             const ExperimentConfig& config);
// Loads the topology from config.topology_path and writes the CSV to
// config.output_path when set. I/O failures raise IoError naming the path.
std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& config);

// Header "load,sample,seed,cost_conventional,cost_aggregation,gain"; gain
// rendered with six decimals.
std::string records_to_csv(std::span<const ExperimentRecord> records);

struct LoadSummary {
  std::size_t load = 0;
  std::size_t samples = 0;
  Rational mean_gain;
  Rational min_gain;
  Rational max_gain;
};

// One row per load in ascending order. Throws ParameterError on empty input.
std::vector<LoadSummary> summarize(std::span<const ExperimentRecord> records);
std::string format_summary(std::span<const LoadSummary> rows);

}  // namespace optagg

#endif  // OPTAGG_EXPERIMENT_H_
