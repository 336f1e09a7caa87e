#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mdt/graph.hpp"

namespace mdt {

// Instrumentation units: one per comparison in a min-extraction scan, one per
// relaxation test, one per assignment of (Tc, F), one per cost-matrix test or
// update, one per next-hop presence update.
struct OpCounter {
  std::uint64_t min_comparisons = 0;
  std::uint64_t relax_tests = 0;
  std::uint64_t tc_updates = 0;
  std::uint64_t mc_tests = 0;
  std::uint64_t mc_updates = 0;
  std::uint64_t tp_updates = 0;

  std::uint64_t total() const {
    return min_comparisons + relax_tests + tc_updates + mc_tests + mc_updates +
           tp_updates;
  }

  OpCounter& operator+=(const OpCounter& o) {
    min_comparisons += o.min_comparisons;
    relax_tests += o.relax_tests;
    tc_updates += o.tc_updates;
    mc_tests += o.mc_tests;
    mc_updates += o.mc_updates;
    tp_updates += o.tp_updates;
    return *this;
  }

  friend bool operator==(const OpCounter&, const OpCounter&) = default;
};

// Shortest-path tree from `root`: best costs (Tc), fathers (F), marking order
// (T) and the first hop of each node's primary path.
struct SptResult {
  NodeId root;
  std::vector<Cost> cost;
  std::vector<std::optional<NodeId>> father;
  std::vector<NodeId> order;
  std::vector<std::optional<NodeId>> first_hop;

  bool reachable(NodeId x) const { return is_finite(cost[x.index()]); }
  Cost cost_to(NodeId x) const { return cost[x.index()]; }
  std::optional<NodeId> father_of(NodeId x) const { return father[x.index()]; }
  std::optional<NodeId> first_hop_of(NodeId x) const {
    return first_hop[x.index()];
  }
};

// Deterministic Dijkstra with a linear-scan array list. Ties in extraction go
// to the smallest index; an equal-cost relaxation keeps the existing father.
// `excluded` removes one node from the search entirely (it is never reached,
// scanned or relaxed).
SptResult dijkstra(const Graph& g, NodeId root, OpCounter& ops,
                   std::optional<NodeId> excluded = std::nullopt);
SptResult dijkstra(const Graph& g, NodeId root);

// Next hops of every equal-best-cost path, per destination.
struct EcmpCandidates {
  NodeId root;
  std::vector<Cost> cost;
  std::vector<std::vector<NodeId>> next_hops;  // sorted by index

  const std::vector<NodeId>& at(NodeId d) const { return next_hops[d.index()]; }
};

struct EcmpResult {
  SptResult spt;
  EcmpCandidates candidates;
  OpCounter ops;
};

// Dijkstra sweep with ECMP inheritance: on Tc(x)+w(x,y) < Tc(y) the set of y
// is replaced by that of x, on equality it is merged.
EcmpResult ecmp_candidates(const Graph& g, NodeId root);

}  // namespace mdt
