#ifndef OPTAGG_TOPOLOGY_H_
#define OPTAGG_TOPOLOGY_H_

#include <compare>
#include <cstdint>
#include <filesystem>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace optagg {

// Positive integer node label. Labels need not be contiguous.
struct NodeId {
  std::uint32_t value = 0;

  constexpr NodeId() = default;
  constexpr explicit NodeId(std::uint32_t v) : value(v) {}

  friend constexpr auto operator<=>(const NodeId&, const NodeId&) = default;
};

inline std::ostream& operator<<(std::ostream& os, NodeId id) {
  return os << id.value;
}

// Directed fiber arc tail -> head.
struct Arc {
  NodeId tail;
  NodeId head;

  friend constexpr auto operator<=>(const Arc&, const Arc&) = default;
};

using Link = std::pair<NodeId, NodeId>;
using Path = std::vector<NodeId>;

// Connected, loop-free fiber network. Every undirected link is stored as a
// pair of opposite arcs. Immutable once built.
class Topology {
 public:
  // Throws ValidationError on self-loops, an empty link list, or a
  // disconnected graph. Duplicate links collapse to one.
  static Topology FromLinks(std::span<const Link> links, std::string name = "");

  const std::string& name() const { return name_; }

  // Sorted ascending.
  std::span<const NodeId> nodes() const { return nodes_; }
  // Sorted by (tail, head).
  std::span<const Arc> arcs() const { return arcs_; }
  // Undirected links with first < second, sorted.
  std::vector<Link> links() const;

  std::size_t num_nodes() const { return nodes_.size(); }
  std::size_t num_arcs() const { return arcs_.size(); }

  bool contains(NodeId id) const;
  // Dense index in [0, num_nodes()). Throws ContractError for unknown ids.
  std::size_t index_of(NodeId id) const;
  // Sorted ascending.
  std::span<const NodeId> neighbors(NodeId id) const;
  bool has_arc(NodeId tail, NodeId head) const;

 private:
  Topology() = default;

  std::string name_;
  std::vector<NodeId> nodes_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<NodeId>> adjacency_;
};

// Edge-list document: one undirected link per line as two positive
// integers, '#' comment lines and blank lines ignored.
Topology parse_topology(std::string_view text, std::string name = "");
Topology load_topology(const std::filesystem::path& path);
// Inverse of parse_topology, one "u v" line per undirected link.
std::string serialize_topology(const Topology& topology);

// All-pairs hop counts.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(std::vector<NodeId> nodes, std::vector<int> hops);

  int operator()(NodeId from, NodeId to) const;
  std::span<const NodeId> nodes() const { return nodes_; }

 private:
  std::size_t index_of(NodeId id) const;

  std::vector<NodeId> nodes_;
  std::vector<int> hops_;
};

// One breadth-first search per node.
DistanceMatrix hop_distances(const Topology& topology);

// One hop-shortest path from `from` to `to`, inclusive of both endpoints.
// Among equal-length continuations the smallest next node id wins.
Path shortest_path(const Topology& topology, NodeId from, NodeId to);
Path shortest_path(const Topology& topology, const DistanceMatrix& distances,
                   NodeId from, NodeId to);

}  // namespace optagg

#endif  // OPTAGG_TOPOLOGY_H_
