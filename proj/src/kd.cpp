#include "mdt/kd.hpp"

namespace mdt {

KdResult kd(const Graph& g, NodeId root) {
  KdResult out;
  auto& costs = out.costs;

  OpCounter root_ops;
  costs.root_tree = dijkstra(g, root, root_ops);
  out.run_ops.push_back(root_ops);

  out.matrix = CostMatrix(g, root);
  costs.neighbors = g.successors(root);
  for (std::size_t k = 0; k < costs.neighbors.size(); ++k) {
    const auto v = costs.neighbors[k];
    OpCounter run;
    auto tree = dijkstra(g, v, run, root);
    out.run_ops.push_back(run);
    costs.neighbor_costs.push_back(std::move(tree.cost));
    costs.link_weight.push_back(*g.weight(root, v));
    for (std::size_t i = 0; i < g.node_count(); ++i) {
      const NodeId d(i);
      if (d != root) {
        out.matrix.set(k, d, costs.via_cost(k, d));
      }
    }
  }
  for (const auto& r : out.run_ops) {
    out.ops += r;
  }
  out.candidates = candidates_from_matrix(out.matrix);
  return out;
}

}  // namespace mdt
