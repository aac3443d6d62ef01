#ifndef OPTAGG_TRAFFIC_H_
#define OPTAGG_TRAFFIC_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "optagg/topology.h"

namespace optagg {

// One wavelength of traffic from source to dest.
struct Demand {
  std::size_t id = 0;
  NodeId source;
  NodeId dest;

  friend bool operator==(const Demand&, const Demand&) = default;
};

// Ordered demand list. Ids are 0..size-1 in list order; no two demands
// share a (source, dest) pair.
class DemandSet {
 public:
  DemandSet() = default;

  // Throws ValidationError for unknown nodes, source == dest, or duplicate
  // pairs. Ids are assigned in input order.
  static DemandSet FromPairs(const Topology& topology, std::span<const Link> pairs,
                             std::optional<std::uint64_t> seed = std::nullopt);

  std::span<const Demand> demands() const { return demands_; }
  const Demand& operator[](std::size_t id) const { return demands_.at(id); }
  std::size_t size() const { return demands_.size(); }
  bool empty() const { return demands_.empty(); }
  std::optional<std::uint64_t> seed() const { return seed_; }

  friend bool operator==(const DemandSet&, const DemandSet&) = default;

 private:
  std::vector<Demand> demands_;
  std::optional<std::uint64_t> seed_;
};

// std::mt19937_64 with a portable bounded draw. The engine's output is fixed
// by the standard; std::uniform_int_distribution is not, so it is avoided.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

// SplitMix64 finalizer; spreads nearby seeds across the 64-bit range.
constexpr std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Two distinct random sources, then n_dest distinct destinations drawn from
// the remaining nodes; one demand per (source, destination), source-major.
DemandSet generate_two_to_many(const Topology& topology, std::size_t n_dest,
                               std::uint64_t seed);

// Header-free "source,dest" lines; '#' comments and blank lines ignored.
DemandSet parse_demands(std::string_view text, const Topology& topology);
DemandSet load_demands(const std::filesystem::path& path, const Topology& topology);
std::string serialize_demands(const DemandSet& demands);

}  // namespace optagg

#endif  // OPTAGG_TRAFFIC_H_
