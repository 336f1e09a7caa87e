#pragma once

#include <compare>
#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace mdt {

using Cost = double;
inline constexpr Cost kInfinity = std::numeric_limits<Cost>::infinity();

inline bool is_finite(Cost c) { return c != kInfinity; }

// Dense node index. Ordering follows first appearance in the input and is used
// for every tie-break downstream.
struct NodeId {
  std::uint32_t value = 0;

  constexpr NodeId() = default;
  constexpr explicit NodeId(std::uint32_t v) : value(v) {}
  constexpr explicit NodeId(std::size_t v) : value(static_cast<std::uint32_t>(v)) {}
  constexpr explicit NodeId(int v) : value(static_cast<std::uint32_t>(v)) {}

  constexpr std::size_t index() const { return value; }
  constexpr auto operator<=>(const NodeId&) const = default;
};

struct Edge {
  NodeId from;
  NodeId to;
  Cost weight = 0;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reported with the 1-based line number of the offending input line.
class ParseError : public GraphError {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Immutable weighted directed graph. Every edge (x,y) has its reverse (y,x);
// weights are strictly positive and may differ per direction. Out-edges of a
// node are sorted by target index.
class Graph {
 public:
  Graph() = default;

  std::size_t node_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const Edge> edges() const { return edges_; }
  std::span<const Edge> out_edges(NodeId x) const;

  std::size_t out_degree(NodeId x) const { return out_edges(x).size(); }
  // Equal to out_degree() because edges are symmetric.
  std::size_t in_degree(NodeId x) const { return in_degree_[x.index()]; }

  // Position of (x,y) in edges().
  std::optional<std::size_t> edge_index(NodeId x, NodeId y) const;
  std::optional<Cost> weight(NodeId x, NodeId y) const;
  bool has_edge(NodeId x, NodeId y) const { return weight(x, y).has_value(); }

  const std::string& label(NodeId x) const { return labels_[x.index()]; }
  std::optional<NodeId> find(std::string_view label) const;
  // Throws GraphError when the label is unknown.
  NodeId at(std::string_view label) const;

  std::vector<NodeId> nodes() const;
  std::vector<NodeId> successors(NodeId x) const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  friend class GraphBuilder;

  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<Edge> edges_;  // grouped by source, sorted by (from, to)
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> in_degree_;
};

class GraphBuilder {
 public:
  // Returns the existing id when the label was already added.
  NodeId add_node(std::string_view label);

  // Adds (u,v) with `weight` and (v,u) with `reverse_weight` (defaults to
  // `weight`). Throws GraphError on self-loops, non-positive weights and
  // duplicate ordered pairs.
  void add_link(NodeId u, NodeId v, Cost weight,
                std::optional<Cost> reverse_weight = std::nullopt);
  void add_link(std::string_view u, std::string_view v, Cost weight,
                std::optional<Cost> reverse_weight = std::nullopt);

  std::size_t node_count() const { return labels_.size(); }
  bool has_edge(NodeId u, NodeId v) const;

  Graph build() const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<Edge> edges_;
  std::unordered_map<std::uint64_t, std::size_t> pairs_;
};

// Edge-list text: `u v w [w_rev]` per line, `#` starts a comment.
Graph load_graph(std::string_view text);
Graph load_graph(std::istream& in);
Graph load_graph_file(const std::string& path);

// One line per undirected link, ordered so that reloading reproduces the node
// indices whenever the graph came from an edge list.
std::string serialize(const Graph& g);

// The edge-partition example: root s, neighbors 1, n, 6, two transverse links
// (6-1, b-c) and one internal link (c-11). All weights are 1.
Graph partition_example();

bool is_connected(const Graph& g);

struct BridgeReport {
  bool two_edge_connected = true;
  // Undirected links as (smaller index, larger index), sorted.
  std::vector<std::pair<NodeId, NodeId>> bridges;
};

// Throws GraphError for a disconnected graph.
BridgeReport is_two_edge_connected(const Graph& g);

struct TopologyGenSpec {
  std::size_t nodes = 100;
  std::size_t cluster_size = 10;
  Cost access_weight = 64;
  Cost backbone_weight = 1;
  double mean_degree = 4.0;
  std::uint64_t seed = 1;
};

// Two-tier access/backbone topology. Nodes are split into ceil(n / cluster)
// contiguous clusters. The first two members of each cluster are backbone
// routers and all backbone routers form one backbone ring; the members of a
// cluster form a ring of access links. Random chords drawn from the remaining
// intra-cluster pairs and backbone pairs bring the mean degree to the target.
Graph generate_topology(const TopologyGenSpec& spec);

}  // namespace mdt

template <>
struct std::hash<mdt::NodeId> {
  std::size_t operator()(mdt::NodeId n) const noexcept { return n.value; }
};
