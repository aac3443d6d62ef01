#include "optagg/traffic.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "optagg/errors.h"

namespace optagg {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::uint32_t ParseNode(std::string_view token, std::size_t line_no) {
  token = Trim(token);
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() || value == 0) {
    throw ParseError(line_no, "node ids must be positive integers");
  }
  return value;
}

// First k entries of `pool` become a uniform random k-subset, in draw order.
void PartialShuffle(std::vector<NodeId>& pool, std::size_t k, SeededRng& rng) {
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t j = i + static_cast<std::size_t>(rng.below(pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
}

}  // namespace

std::uint64_t SeededRng::below(std::uint64_t bound) {
  if (bound == 0) throw ContractError("SeededRng::below needs a positive bound");
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  // 2^64 mod bound: draws at or above 2^64 - excess would bias the result.
  const std::uint64_t excess = (kMax % bound + 1) % bound;
  std::uint64_t r = engine_();
  while (excess != 0 && r > kMax - excess) r = engine_();
  return r % bound;
}

DemandSet DemandSet::FromPairs(const Topology& topology, std::span<const Link> pairs,
                               std::optional<std::uint64_t> seed) {
  DemandSet set;
  set.seed_ = seed;
  std::set<Link> seen;
  for (const auto& [source, dest] : pairs) {
    if (!topology.contains(source) || !topology.contains(dest)) {
      throw ValidationError("demand " + std::to_string(source.value) + "," +
                            std::to_string(dest.value) + " names an unknown node");
    }
    if (source == dest) {
      throw ValidationError("demand source equals destination (node " +
                            std::to_string(source.value) + ")");
    }
    if (!seen.insert({source, dest}).second) {
      throw ValidationError("duplicate demand " + std::to_string(source.value) + "," +
                            std::to_string(dest.value));
    }
    set.demands_.push_back({set.demands_.size(), source, dest});
  }
  return set;
}

DemandSet generate_two_to_many(const Topology& topology, std::size_t n_dest,
                               std::uint64_t seed) {
  if (topology.num_nodes() < 2 || n_dest > topology.num_nodes() - 2) {
    throw ParameterError("cannot pick " + std::to_string(n_dest) +
                         " destinations besides two sources from " +
                         std::to_string(topology.num_nodes()) + " nodes");
  }
  SeededRng rng(seed);
  std::vector<NodeId> pool(topology.nodes().begin(), topology.nodes().end());
  PartialShuffle(pool, 2, rng);
  const NodeId sources[2] = {pool[0], pool[1]};

  std::vector<NodeId> rest(pool.begin() + 2, pool.end());
  std::sort(rest.begin(), rest.end());
  PartialShuffle(rest, n_dest, rng);

  std::vector<Link> pairs;
  for (NodeId s : sources) {
    for (std::size_t i = 0; i < n_dest; ++i) pairs.emplace_back(s, rest[i]);
  }
  return DemandSet::FromPairs(topology, pairs, seed);
}

DemandSet parse_demands(std::string_view text, const Topology& topology) {
  std::vector<Link> pairs;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    std::size_t eol = text.find('\n');
    std::string_view line = Trim(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (line.empty() || line.front() == '#') continue;

    std::size_t comma = line.find(',');
    if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
      throw ParseError(line_no, "expected \"source,dest\"");
    }
    pairs.emplace_back(NodeId{ParseNode(line.substr(0, comma), line_no)},
                       NodeId{ParseNode(line.substr(comma + 1), line_no)});
  }
  return DemandSet::FromPairs(topology, pairs);
}

DemandSet load_demands(const std::filesystem::path& path, const Topology& topology) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open demand file " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_demands(buf.str(), topology);
}

std::string serialize_demands(const DemandSet& demands) {
  std::ostringstream out;
  if (demands.seed()) out << "# seed " << *demands.seed() << '\n';
  for (const Demand& d : demands.demands()) {
    out << d.source << ',' << d.dest << '\n';
  }
  return out.str();
}

}  // namespace optagg
