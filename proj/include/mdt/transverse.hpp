#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mdt/graph.hpp"
#include "mdt/spt.hpp"

namespace mdt {

// Mc: per (neighbor k of the root, destination d) an upper bound on the cost
// of a path from the root to d whose first hop is k; infinity when no such
// path was recorded. Rows follow the root's successors in index order.
class CostMatrix {
 public:
  CostMatrix() = default;
  CostMatrix(const Graph& g, NodeId root);

  NodeId root() const { return root_; }
  std::size_t node_count() const { return node_count_; }
  std::span<const NodeId> neighbors() const { return neighbors_; }
  std::size_t rows() const { return neighbors_.size(); }

  std::optional<std::size_t> slot(NodeId k) const;
  NodeId neighbor(std::size_t slot) const { return neighbors_[slot]; }
  // w(root, neighbor(slot)).
  Cost link_weight(std::size_t slot) const { return link_weights_[slot]; }

  // `k` must be a neighbor of the root.
  Cost at(NodeId k, NodeId d) const;
  Cost get(std::size_t slot, NodeId d) const {
    return values_[slot * node_count_ + d.index()];
  }
  void set(std::size_t slot, NodeId d, Cost c) {
    values_[slot * node_count_ + d.index()] = c;
  }

  friend bool operator==(const CostMatrix&, const CostMatrix&) = default;

 private:
  NodeId root_;
  std::size_t node_count_ = 0;
  std::vector<NodeId> neighbors_;
  std::vector<Cost> link_weights_;
  std::vector<int> slot_of_;
  std::vector<Cost> values_;
};

// Tp: presence of neighbor k as a recorded first hop toward y.
class NextHopMatrix {
 public:
  NextHopMatrix() = default;
  NextHopMatrix(std::size_t rows, std::size_t node_count)
      : node_count_(node_count), present_(rows * node_count, false) {}

  bool present(std::size_t slot, NodeId y) const {
    return present_[slot * node_count_ + y.index()];
  }
  void mark(std::size_t slot, NodeId y) {
    present_[slot * node_count_ + y.index()] = true;
  }

 private:
  std::size_t node_count_ = 0;
  std::vector<bool> present_;
};

struct Candidate {
  NodeId next_hop;
  Cost cost = kInfinity;

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

// Per destination, the finite (next hop, cost) pairs sorted by (cost, index).
class CandidateSet {
 public:
  CandidateSet() = default;
  explicit CandidateSet(std::size_t node_count) : entries_(node_count) {}

  std::size_t node_count() const { return entries_.size(); }
  const std::vector<Candidate>& at(NodeId d) const {
    return entries_[d.index()];
  }
  std::vector<Candidate>& at(NodeId d) { return entries_[d.index()]; }

  // Next hops toward d sorted by index.
  std::vector<NodeId> next_hops(NodeId d) const;
  std::size_t total() const;

  friend bool operator==(const CandidateSet&, const CandidateSet&) = default;

 private:
  std::vector<std::vector<Candidate>> entries_;
};

CandidateSet candidates_from_matrix(const CostMatrix& mc);

// State after the Dijkstra sweep, before backward/forward composition.
struct SweepPhase {
  SptResult spt;
  CostMatrix costs;
  NextHopMatrix next_hops;  // only filled by the mDT sweep
  OpCounter ops;
};

struct MultipathResult {
  SptResult spt;
  CostMatrix costs;
  CandidateSet candidates;
  OpCounter ops;
};

// DT first stage: primary costs Mc(firstHop(y), y) = Tc(y) plus one-edge
// extensions Tc(x) + w(x,y) recorded in row firstHop(x).
SweepPhase dt_sweep(const Graph& g, NodeId root);

// mDT first stage: every explored edge (x,y) with y not yet marked passes all
// of x's recorded first hops and costs on to y.
SweepPhase mdt_sweep(const Graph& g, NodeId root);

// One backward pass (children before fathers, reverse marking order) pushing
// costs up the tree, then one forward pass pushing them down. The root column
// is never written.
void compose_transverse(const Graph& g, const SptResult& spt, CostMatrix& mc,
                        OpCounter& ops);

MultipathResult dt(const Graph& g, NodeId root);
MultipathResult mdt(const Graph& g, NodeId root);

}  // namespace mdt
