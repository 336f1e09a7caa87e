#include "mdt/transverse.hpp"

#include <algorithm>

#include "mdt/detail/sweep.hpp"

namespace mdt {

CostMatrix::CostMatrix(const Graph& g, NodeId root)
    : root_(root),
      node_count_(g.node_count()),
      neighbors_(g.successors(root)),
      slot_of_(g.node_count(), -1),
      values_(neighbors_.size() * g.node_count(), kInfinity) {
  for (std::size_t i = 0; i < neighbors_.size(); ++i) {
    slot_of_[neighbors_[i].index()] = static_cast<int>(i);
    link_weights_.push_back(*g.weight(root, neighbors_[i]));
  }
}

std::optional<std::size_t> CostMatrix::slot(NodeId k) const {
  const int s = slot_of_[k.index()];
  if (s < 0) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(s);
}

Cost CostMatrix::at(NodeId k, NodeId d) const {
  const auto s = slot(k);
  if (!s) {
    throw GraphError("not a neighbor of the root");
  }
  return get(*s, d);
}

std::vector<NodeId> CandidateSet::next_hops(NodeId d) const {
  std::vector<NodeId> out;
  for (const auto& c : at(d)) {
    out.push_back(c.next_hop);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t CandidateSet::total() const {
  std::size_t sum = 0;
  for (const auto& e : entries_) {
    sum += e.size();
  }
  return sum;
}

CandidateSet candidates_from_matrix(const CostMatrix& mc) {
  CandidateSet out(mc.node_count());
  for (std::size_t i = 0; i < mc.node_count(); ++i) {
    const NodeId d(i);
    if (d == mc.root()) {
      continue;
    }
    auto& list = out.at(d);
    for (std::size_t k = 0; k < mc.rows(); ++k) {
      const Cost c = mc.get(k, d);
      if (is_finite(c)) {
        list.push_back({mc.neighbor(k), c});
      }
    }
    std::sort(list.begin(), list.end(), [](const Candidate& a, const Candidate& b) {
      return a.cost != b.cost ? a.cost < b.cost : a.next_hop < b.next_hop;
    });
  }
  return out;
}

namespace {

// Mc(slot, d) <- min(Mc(slot, d), value), counted as one test plus an update
// when it improves.
void relax_entry(CostMatrix& mc, std::size_t slot, NodeId d, Cost value,
                 OpCounter& ops) {
  ++ops.mc_tests;
  if (value < mc.get(slot, d)) {
    mc.set(slot, d, value);
    ++ops.mc_updates;
  }
}

}  // namespace

SweepPhase dt_sweep(const Graph& g, NodeId root) {
  SweepPhase phase;
  phase.costs = CostMatrix(g, root);
  auto& mc = phase.costs;
  auto& spt = phase.spt;
  auto& ops = phase.ops;

  detail::sweep(
      g, root, std::nullopt, ops, spt,
      [&](NodeId x) {
        if (x == root) {
          return;
        }
        const auto k = mc.slot(*spt.first_hop_of(x));
        relax_entry(mc, *k, x, spt.cost_to(x), ops);
      },
      [&](NodeId x, const Edge& e, detail::Relax) {
        const auto y = e.to;
        if (y == root) {
          return;
        }
        // Same-branch targets are dominated by their primary entry, so only
        // transverse edges change the matrix.
        if (x == root) {
          relax_entry(mc, *mc.slot(y), y, e.weight, ops);
        } else {
          relax_entry(mc, *mc.slot(*spt.first_hop_of(x)), y,
                      spt.cost_to(x) + e.weight, ops);
        }
      });
  return phase;
}

SweepPhase mdt_sweep(const Graph& g, NodeId root) {
  SweepPhase phase;
  phase.costs = CostMatrix(g, root);
  auto& mc = phase.costs;
  auto& spt = phase.spt;
  auto& ops = phase.ops;
  phase.next_hops = NextHopMatrix(mc.rows(), g.node_count());
  auto& tp = phase.next_hops;

  detail::sweep(
      g, root, std::nullopt, ops, spt, [](NodeId) {},
      [&](NodeId x, const Edge& e, detail::Relax outcome) {
        const auto y = e.to;
        if (y == root) {
          return;
        }
        if (x == root) {
          const auto k = *mc.slot(y);
          tp.mark(k, y);
          ++ops.tp_updates;
          relax_entry(mc, k, y, e.weight, ops);
          return;
        }
        if (outcome == detail::Relax::kMarked) {
          // y is final: record the one-edge extension of x's primary path.
          const auto k = *mc.slot(*spt.first_hop_of(x));
          tp.mark(k, y);
          ++ops.tp_updates;
          relax_entry(mc, k, y, spt.cost_to(x) + e.weight, ops);
          return;
        }
        for (std::size_t k = 0; k < mc.rows(); ++k) {
          if (!tp.present(k, x)) {
            continue;
          }
          tp.mark(k, y);
          ++ops.tp_updates;
          relax_entry(mc, k, y, mc.get(k, x) + e.weight, ops);
        }
      });
  return phase;
}

void compose_transverse(const Graph& g, const SptResult& spt, CostMatrix& mc,
                        OpCounter& ops) {
  const auto root = spt.root;
  const auto& order = spt.order;

  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto x = *it;
    const auto f = spt.father_of(x);
    if (!f || *f == root) {
      continue;
    }
    const Cost up = *g.weight(x, *f);
    for (std::size_t k = 0; k < mc.rows(); ++k) {
      relax_entry(mc, k, *f, mc.get(k, x) + up, ops);
    }
  }

  for (const auto x : order) {
    const auto f = spt.father_of(x);
    if (!f || *f == root) {
      continue;
    }
    const Cost down = *g.weight(*f, x);
    for (std::size_t k = 0; k < mc.rows(); ++k) {
      relax_entry(mc, k, x, mc.get(k, *f) + down, ops);
    }
  }
}

namespace {

MultipathResult finish(const Graph& g, SweepPhase phase) {
  compose_transverse(g, phase.spt, phase.costs, phase.ops);
  MultipathResult out;
  out.candidates = candidates_from_matrix(phase.costs);
  out.spt = std::move(phase.spt);
  out.costs = std::move(phase.costs);
  out.ops = phase.ops;
  return out;
}

}  // namespace

MultipathResult dt(const Graph& g, NodeId root) {
  return finish(g, dt_sweep(g, root));
}

MultipathResult mdt(const Graph& g, NodeId root) {
  return finish(g, mdt_sweep(g, root));
}

}  // namespace mdt
