#pragma once

#include <vector>

#include "mdt/graph.hpp"
#include "mdt/spt.hpp"
#include "mdt/transverse.hpp"

namespace mdt {

// Best costs of the root and of each of its neighbors. A neighbor's search
// runs with the root removed, so neighbor_cost(v, d) is the cost of v's best
// path to d that does not come back through the root.
struct KdCosts {
  SptResult root_tree;
  std::vector<NodeId> neighbors;               // successors of the root
  std::vector<std::vector<Cost>> neighbor_costs;  // [slot][d]
  std::vector<Cost> link_weight;               // w(root, neighbor)

  NodeId root() const { return root_tree.root; }
  Cost root_cost(NodeId d) const { return root_tree.cost_to(d); }
  Cost neighbor_cost(std::size_t slot, NodeId d) const {
    return neighbor_costs[slot][d.index()];
  }
  // w(root, v) + neighbor_cost(v, d): best loop-free path with first hop v.
  Cost via_cost(std::size_t slot, NodeId d) const {
    return link_weight[slot] + neighbor_cost(slot, d);
  }
};

struct KdResult {
  KdCosts costs;
  CostMatrix matrix;  // via_cost in the same layout as DT/mDT
  CandidateSet candidates;
  OpCounter ops;
  std::vector<OpCounter> run_ops;  // root run first, then one per neighbor
};

// k+(root) + 1 Dijkstra runs.
KdResult kd(const Graph& g, NodeId root);

}  // namespace mdt
