#include "mdt/spt.hpp"

#include <algorithm>
#include <iterator>

#include "mdt/detail/sweep.hpp"

namespace mdt {

SptResult dijkstra(const Graph& g, NodeId root, OpCounter& ops,
                   std::optional<NodeId> excluded) {
  SptResult out;
  detail::sweep(
      g, root, excluded, ops, out, [](NodeId) {},
      [](NodeId, const Edge&, detail::Relax) {});
  return out;
}

SptResult dijkstra(const Graph& g, NodeId root) {
  OpCounter ops;
  return dijkstra(g, root, ops);
}

EcmpResult ecmp_candidates(const Graph& g, NodeId root) {
  EcmpResult result;
  auto& sets = result.candidates.next_hops;
  sets.assign(g.node_count(), {});

  detail::sweep(
      g, root, std::nullopt, result.ops, result.spt, [](NodeId) {},
      [&](NodeId x, const Edge& e, detail::Relax outcome) {
        using detail::Relax;
        if (outcome != Relax::kImproved && outcome != Relax::kEqual) {
          return;
        }
        const std::vector<NodeId> inherited =
            (x == root) ? std::vector<NodeId>{e.to} : sets[x.index()];
        auto& target = sets[e.to.index()];
        ++result.ops.tp_updates;
        if (outcome == Relax::kImproved) {
          target = inherited;
          return;
        }
        std::vector<NodeId> merged;
        std::set_union(target.begin(), target.end(), inherited.begin(),
                       inherited.end(), std::back_inserter(merged));
        target = std::move(merged);
      });

  result.candidates.root = root;
  result.candidates.cost = result.spt.cost;
  return result;
}

}  // namespace mdt
