#include "mdt/oracle.hpp"

#include <algorithm>
#include <unordered_set>

#include <fmt/format.h>

namespace mdt {

namespace {

void check_size(const Graph& g, std::size_t max_nodes) {
  if (g.node_count() > max_nodes) {
    throw OracleLimitError(
        fmt::format("oracle limited to {} nodes, graph has {}", max_nodes,
                    g.node_count()));
  }
}

OracleCosts empty_costs(const Graph& g, NodeId root) {
  OracleCosts out;
  out.root = root;
  out.neighbors = g.successors(root);
  out.node_count = g.node_count();
  out.via.assign(out.neighbors.size() * out.node_count, kInfinity);
  return out;
}

}  // namespace

Cost OracleCosts::best(NodeId d) const {
  Cost c = kInfinity;
  for (std::size_t k = 0; k < neighbors.size(); ++k) {
    c = std::min(c, via_cost(k, d));
  }
  return c;
}

std::size_t OracleCosts::finite_hops(NodeId d) const {
  std::size_t n = 0;
  for (std::size_t k = 0; k < neighbors.size(); ++k) {
    n += is_finite(via_cost(k, d)) ? 1 : 0;
  }
  return n;
}

void for_each_simple_path(
    const Graph& g, NodeId root,
    const std::function<void(std::span<const NodeId>, Cost)>& visit,
    std::size_t max_nodes) {
  check_size(g, max_nodes);
  std::vector<bool> on_path(g.node_count(), false);
  std::vector<NodeId> path{root};
  on_path[root.index()] = true;

  struct Frame {
    std::size_t next = 0;
    Cost cost = 0;
  };
  std::vector<Frame> stack{{0, 0}};
  while (!stack.empty()) {
    const auto x = path.back();
    const auto out = g.out_edges(x);
    auto& top = stack.back();
    if (top.next == out.size()) {
      on_path[x.index()] = false;
      path.pop_back();
      stack.pop_back();
      continue;
    }
    const Edge& e = out[top.next++];
    if (on_path[e.to.index()]) {
      continue;
    }
    const Cost cost = top.cost + e.weight;
    path.push_back(e.to);
    on_path[e.to.index()] = true;
    visit(path, cost);
    stack.push_back({0, cost});
  }
}

OracleCosts oracle_first_hop_costs(const Graph& g, NodeId root,
                                   std::size_t max_nodes) {
  auto out = empty_costs(g, root);
  std::vector<int> slot(g.node_count(), -1);
  for (std::size_t k = 0; k < out.neighbors.size(); ++k) {
    slot[out.neighbors[k].index()] = static_cast<int>(k);
  }
  for_each_simple_path(
      g, root,
      [&](std::span<const NodeId> path, Cost cost) {
        const auto k = static_cast<std::size_t>(slot[path[1].index()]);
        auto& cell = out.via[k * out.node_count + path.back().index()];
        cell = std::min(cell, cost);
      },
      max_nodes);
  return out;
}

OracleCosts oracle_first_hop_costs_by_removal(const Graph& g, NodeId root) {
  auto out = empty_costs(g, root);
  const auto n = g.node_count();
  for (std::size_t k = 0; k < out.neighbors.size(); ++k) {
    const auto v = out.neighbors[k];
    std::vector<Cost> dist(n, kInfinity);
    dist[v.index()] = 0;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Edge& e : g.edges()) {
        if (e.from == root || e.to == root || !is_finite(dist[e.from.index()])) {
          continue;
        }
        const Cost c = dist[e.from.index()] + e.weight;
        if (c < dist[e.to.index()]) {
          dist[e.to.index()] = c;
          changed = true;
        }
      }
    }
    const Cost w = *g.weight(root, v);
    for (std::size_t d = 0; d < n; ++d) {
      if (NodeId(d) != root) {
        out.via[k * n + d] = w + dist[d];
      }
    }
  }
  return out;
}

Cost TransverseClassCosts::transverse_min(std::size_t slot, NodeId d) const {
  const auto i = at(slot, d);
  return std::min({simple[i], backward[i], forward[i]});
}

Cost TransverseClassCosts::class_min(std::size_t slot, NodeId d) const {
  return std::min(primary[at(slot, d)], transverse_min(slot, d));
}

std::vector<NodeId> tree_path(const SptResult& spt, NodeId x) {
  std::vector<NodeId> path{x};
  while (const auto f = spt.father_of(path.back())) {
    path.push_back(*f);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

NodeId closest_common_ancestor(const SptResult& spt, NodeId x, NodeId y) {
  std::unordered_set<NodeId> ancestors;
  for (auto a = std::optional<NodeId>(x); a; a = spt.father_of(*a)) {
    ancestors.insert(*a);
  }
  for (auto a = std::optional<NodeId>(y); a; a = spt.father_of(*a)) {
    if (ancestors.contains(*a)) {
      return *a;
    }
  }
  throw GraphError("nodes are not in the same tree");
}

TransverseClassCosts oracle_transverse_costs(const Graph& g,
                                             const SptResult& spt,
                                             const EdgePartition& partition,
                                             std::size_t max_nodes) {
  check_size(g, max_nodes);
  const auto n = g.node_count();
  const auto root = spt.root;

  TransverseClassCosts out;
  out.root = root;
  out.neighbors = g.successors(root);
  out.node_count = n;
  const auto cells = out.neighbors.size() * n;
  out.primary.assign(cells, kInfinity);
  out.simple.assign(cells, kInfinity);
  out.backward.assign(cells, kInfinity);
  out.forward.assign(cells, kInfinity);

  std::vector<int> slot(n, -1);
  for (std::size_t k = 0; k < out.neighbors.size(); ++k) {
    slot[out.neighbors[k].index()] = static_cast<int>(k);
  }
  auto slot_of = [&](NodeId v) { return static_cast<std::size_t>(slot[v.index()]); };

  for (std::size_t i = 0; i < n; ++i) {
    const NodeId d(i);
    if (d != root && spt.reachable(d)) {
      out.primary[out.at(slot_of(*spt.first_hop_of(d)), d)] = spt.cost_to(d);
    }
  }

  auto path_cost = [&](const std::vector<NodeId>& path) {
    Cost c = 0;
    for (std::size_t j = 1; j < path.size(); ++j) {
      c += *g.weight(path[j - 1], path[j]);
    }
    return c;
  };
  auto is_simple = [](std::vector<NodeId> path) {
    std::sort(path.begin(), path.end());
    return std::adjacent_find(path.begin(), path.end()) == path.end();
  };

  const auto edges = g.edges();
  for (std::size_t ei = 0; ei < edges.size(); ++ei) {
    if (partition.edge_class[ei] != EdgeClass::kTransverse) {
      continue;
    }
    const auto x = edges[ei].from;
    const auto c = edges[ei].to;
    const auto k = slot_of(x == root ? c : *spt.first_hop_of(x));

    auto prefix = tree_path(spt, x);
    prefix.push_back(c);
    const Cost prefix_cost = path_cost(prefix);
    auto& pt = out.simple[out.at(k, c)];
    pt = std::min(pt, prefix_cost);

    for (std::size_t j = 0; j < n; ++j) {
      const NodeId d(j);
      if (d == c || d == root || !spt.reachable(d) ||
          partition.branch_of(d) != partition.branch_of(c)) {
        continue;
      }
      const auto meet = closest_common_ancestor(spt, c, d);
      auto path = prefix;
      for (auto a = c; a != meet;) {
        a = *spt.father_of(a);
        path.push_back(a);
      }
      const auto down = tree_path(spt, d);
      const auto from = std::find(down.begin(), down.end(), meet);
      path.insert(path.end(), from + 1, down.end());
      if (!is_simple(path)) {
        continue;
      }
      auto& cell = (meet == d) ? out.backward[out.at(k, d)]
                               : out.forward[out.at(k, d)];
      cell = std::min(cell, path_cost(path));
    }
  }
  return out;
}

}  // namespace mdt
