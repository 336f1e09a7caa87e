#pragma once

#include <optional>
#include <vector>

#include "mdt/graph.hpp"
#include "mdt/spt.hpp"

namespace mdt::detail {

enum class Relax { kImproved, kEqual, kWorse, kMarked };

// The Dijkstra loop shared by every algorithm. `on_extract(x)` runs once x is
// final (cost, father and first hop set); `on_edge(x, edge, outcome)` runs for
// every explored edge after its relaxation test. `outcome == kMarked` means
// the target was already final when the edge was explored.
template <typename OnExtract, typename OnEdge>
void sweep(const Graph& g, NodeId root, std::optional<NodeId> excluded,
           OpCounter& ops, SptResult& out, OnExtract&& on_extract,
           OnEdge&& on_edge) {
  const auto n = g.node_count();
  out.root = root;
  out.cost.assign(n, kInfinity);
  out.father.assign(n, std::nullopt);
  out.first_hop.assign(n, std::nullopt);
  out.order.clear();
  out.order.reserve(n);

  std::vector<bool> marked(n, false);
  std::vector<NodeId> open;
  open.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!excluded || excluded->index() != i) {
      open.emplace_back(i);
    }
  }
  out.cost[root.index()] = 0;

  while (!open.empty()) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < open.size(); ++i) {
      ++ops.min_comparisons;
      const auto ci = out.cost[open[i].index()];
      const auto cb = out.cost[open[best].index()];
      if (ci < cb || (ci == cb && open[i] < open[best])) {
        best = i;
      }
    }
    const NodeId x = open[best];
    if (!is_finite(out.cost[x.index()])) {
      break;
    }
    open[best] = open.back();
    open.pop_back();
    marked[x.index()] = true;
    out.order.push_back(x);
    if (const auto f = out.father[x.index()]) {
      out.first_hop[x.index()] =
          (*f == root) ? x : out.first_hop[f->index()];
    }
    on_extract(x);

    const Cost base = out.cost[x.index()];
    for (const Edge& e : g.out_edges(x)) {
      const auto y = e.to;
      if (excluded && y == *excluded) {
        continue;
      }
      ++ops.relax_tests;
      const Cost candidate = base + e.weight;
      Relax outcome;
      if (marked[y.index()]) {
        outcome = Relax::kMarked;
      } else if (candidate < out.cost[y.index()]) {
        out.cost[y.index()] = candidate;
        out.father[y.index()] = x;
        ++ops.tc_updates;
        outcome = Relax::kImproved;
      } else if (candidate == out.cost[y.index()]) {
        outcome = Relax::kEqual;
      } else {
        outcome = Relax::kWorse;
      }
      on_edge(x, e, outcome);
    }
  }
}

}  // namespace mdt::detail
