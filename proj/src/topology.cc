#include "optagg/topology.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <fstream>
#include <limits>
#include <sstream>

#include "optagg/errors.h"

namespace optagg {
namespace {

std::vector<int> BfsHops(const Topology& topology, NodeId source) {
  std::vector<int> hops(topology.num_nodes(), -1);
  std::deque<NodeId> queue{source};
  hops[topology.index_of(source)] = 0;
  while (!queue.empty()) {
    NodeId u = queue.front();
    queue.pop_front();
    int next = hops[topology.index_of(u)] + 1;
    for (NodeId v : topology.neighbors(u)) {
      int& h = hops[topology.index_of(v)];
      if (h < 0) {
        h = next;
        queue.push_back(v);
      }
    }
  }
  return hops;
}

bool ParsePositive(std::string_view token, std::uint32_t* out) {
  if (token.empty()) return false;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), *out);
  return ec == std::errc() && ptr == token.data() + token.size() && *out > 0;
}

}  // namespace

Topology Topology::FromLinks(std::span<const Link> links, std::string name) {
  Topology t;
  t.name_ = std::move(name);
  if (links.empty()) {
    throw ValidationError("topology has no links");
  }
  for (const auto& [u, v] : links) {
    if (u == v) {
      throw ValidationError("self-loop at node " + std::to_string(u.value));
    }
    if (u.value == 0 || v.value == 0) {
      throw ValidationError("node ids must be positive");
    }
    t.arcs_.push_back({u, v});
    t.arcs_.push_back({v, u});
    t.nodes_.push_back(u);
    t.nodes_.push_back(v);
  }
  std::sort(t.nodes_.begin(), t.nodes_.end());
  t.nodes_.erase(std::unique(t.nodes_.begin(), t.nodes_.end()), t.nodes_.end());
  std::sort(t.arcs_.begin(), t.arcs_.end());
  t.arcs_.erase(std::unique(t.arcs_.begin(), t.arcs_.end()), t.arcs_.end());

  t.adjacency_.resize(t.nodes_.size());
  for (const Arc& a : t.arcs_) {
    t.adjacency_[t.index_of(a.tail)].push_back(a.head);
  }

  std::vector<int> hops = BfsHops(t, t.nodes_.front());
  for (std::size_t i = 0; i < hops.size(); ++i) {
    if (hops[i] < 0) {
      throw ValidationError("topology is disconnected: no path from node " +
                            std::to_string(t.nodes_.front().value) + " to node " +
                            std::to_string(t.nodes_[i].value));
    }
  }
  return t;
}

std::vector<Link> Topology::links() const {
  std::vector<Link> out;
  for (const Arc& a : arcs_) {
    if (a.tail < a.head) out.emplace_back(a.tail, a.head);
  }
  return out;
}

bool Topology::contains(NodeId id) const {
  return std::binary_search(nodes_.begin(), nodes_.end(), id);
}

std::size_t Topology::index_of(NodeId id) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id);
  if (it == nodes_.end() || *it != id) {
    throw ContractError("node " + std::to_string(id.value) + " is not in the topology");
  }
  return static_cast<std::size_t>(it - nodes_.begin());
}

std::span<const NodeId> Topology::neighbors(NodeId id) const {
  return adjacency_[index_of(id)];
}

bool Topology::has_arc(NodeId tail, NodeId head) const {
  return std::binary_search(arcs_.begin(), arcs_.end(), Arc{tail, head});
}

Topology parse_topology(std::string_view text, std::string name) {
  std::vector<Link> links;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      std::size_t start = pos;
      while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      if (pos > start) tokens.push_back(line.substr(start, pos - start));
    }
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected two node ids, found " +
                                    std::to_string(tokens.size()) + " fields");
    }
    std::uint32_t u = 0;
    std::uint32_t v = 0;
    if (!ParsePositive(tokens[0], &u) || !ParsePositive(tokens[1], &v)) {
      throw ParseError(line_no, "node ids must be positive integers");
    }
    links.emplace_back(NodeId{u}, NodeId{v});
  }
  return Topology::FromLinks(links, std::move(name));
}

Topology load_topology(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open topology file " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_topology(buf.str(), path.stem().string());
}

std::string serialize_topology(const Topology& topology) {
  std::ostringstream out;
  if (!topology.name().empty()) out << "# " << topology.name() << "\n";
  for (const auto& [u, v] : topology.links()) {
    out << u << ' ' << v << '\n';
  }
  return out.str();
}

DistanceMatrix::DistanceMatrix(std::vector<NodeId> nodes, std::vector<int> hops)
    : nodes_(std::move(nodes)), hops_(std::move(hops)) {}

std::size_t DistanceMatrix::index_of(NodeId id) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id);
  if (it == nodes_.end() || *it != id) {
    throw ContractError("node " + std::to_string(id.value) + " is not in the distance matrix");
  }
  return static_cast<std::size_t>(it - nodes_.begin());
}

int DistanceMatrix::operator()(NodeId from, NodeId to) const {
  return hops_[index_of(from) * nodes_.size() + index_of(to)];
}

DistanceMatrix hop_distances(const Topology& topology) {
  const std::size_t n = topology.num_nodes();
  std::vector<int> hops(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> row = BfsHops(topology, topology.nodes()[i]);
    std::copy(row.begin(), row.end(), hops.begin() + static_cast<std::ptrdiff_t>(i * n));
  }
  return DistanceMatrix({topology.nodes().begin(), topology.nodes().end()}, std::move(hops));
}

Path shortest_path(const Topology& topology, const DistanceMatrix& distances,
                   NodeId from, NodeId to) {
  if (!topology.contains(from) || !topology.contains(to)) {
    throw ContractError("shortest_path endpoints must belong to the topology");
  }
  Path path{from};
  while (path.back() != to) {
    NodeId here = path.back();
    int remaining = distances(here, to);
    // Neighbors are sorted, so the first hit is the smallest id.
    for (NodeId next : topology.neighbors(here)) {
      if (distances(next, to) == remaining - 1) {
        path.push_back(next);
        break;
      }
    }
  }
  return path;
}

Path shortest_path(const Topology& topology, NodeId from, NodeId to) {
  return shortest_path(topology, hop_distances(topology), from, to);
}

}  // namespace optagg
