#pragma once

#include <functional>
#include <span>
#include <vector>

#include "mdt/graph.hpp"
#include "mdt/partition.hpp"
#include "mdt/spt.hpp"

namespace mdt {

// Brute-force references for small graphs. Nothing here calls the DT/mDT/kD
// code it is used to certify.

inline constexpr std::size_t kDefaultOracleMaxNodes = 14;

class OracleLimitError : public GraphError {
 public:
  using GraphError::GraphError;
};

// Per (neighbor slot, destination): exact cost of the best simple path from
// the root whose first hop is that neighbor.
struct OracleCosts {
  NodeId root;
  std::vector<NodeId> neighbors;  // successors of the root
  std::size_t node_count = 0;
  std::vector<Cost> via;          // [slot * node_count + d]

  Cost via_cost(std::size_t slot, NodeId d) const {
    return via[slot * node_count + d.index()];
  }
  Cost best(NodeId d) const;
  std::size_t finite_hops(NodeId d) const;
  bool alternate_exists(NodeId d) const { return finite_hops(d) >= 2; }
};

// Exhaustive depth-first enumeration of simple paths.
OracleCosts oracle_first_hop_costs(const Graph& g, NodeId root,
                                   std::size_t max_nodes = kDefaultOracleMaxNodes);

// Same quantity as w(s,v) + best cost from v with the root deleted, computed by
// Bellman-Ford style relaxation to a fixpoint.
OracleCosts oracle_first_hop_costs_by_removal(const Graph& g, NodeId root);

// Calls `visit(path, cost)` for every simple path that starts at `root` and
// has at least one edge.
void for_each_simple_path(
    const Graph& g, NodeId root,
    const std::function<void(std::span<const NodeId>, Cost)>& visit,
    std::size_t max_nodes = kDefaultOracleMaxNodes);

// Minimum cost per one-transverse path shape, per (neighbor slot,
// destination). Suffixes after the transverse edge (x, c) follow the tree:
// climb from c to the closest common ancestor n of c and d, then descend to d.
//   simple    d == c
//   backward  n == d != c       (climb only)
//   forward   n != d            (descent, after a simple or backward prefix)
struct TransverseClassCosts {
  NodeId root;
  std::vector<NodeId> neighbors;
  std::size_t node_count = 0;
  std::vector<Cost> primary;
  std::vector<Cost> simple;
  std::vector<Cost> backward;
  std::vector<Cost> forward;

  std::size_t at(std::size_t slot, NodeId d) const {
    return slot * node_count + d.index();
  }
  // min over the three transverse shapes
  Cost transverse_min(std::size_t slot, NodeId d) const;
  // min over primary and the three shapes
  Cost class_min(std::size_t slot, NodeId d) const;
};

TransverseClassCosts oracle_transverse_costs(
    const Graph& g, const SptResult& spt, const EdgePartition& partition,
    std::size_t max_nodes = kDefaultOracleMaxNodes);

// Deepest node that is an ancestor (or self) of both x and y in the tree.
NodeId closest_common_ancestor(const SptResult& spt, NodeId x, NodeId y);

// Nodes on the tree path from the root to x, both included.
std::vector<NodeId> tree_path(const SptResult& spt, NodeId x);

}  // namespace mdt
