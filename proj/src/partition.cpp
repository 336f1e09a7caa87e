#include "mdt/partition.hpp"

namespace mdt {

std::string_view to_string(EdgeClass c) {
  switch (c) {
    case EdgeClass::kFirstHop:
      return "first_hop";
    case EdgeClass::kBranch:
      return "branch";
    case EdgeClass::kTransverse:
      return "transverse";
    case EdgeClass::kInternal:
      return "internal";
    case EdgeClass::kRootReverse:
      return "root_reverse";
    case EdgeClass::kUnreachable:
      return "unreachable";
  }
  return "?";
}

EdgeClass EdgePartition::class_of(const Graph& g, NodeId x, NodeId y) const {
  const auto i = g.edge_index(x, y);
  if (!i) {
    throw GraphError("no such edge");
  }
  return edge_class[*i];
}

EdgePartition classify_edges(const Graph& g, const SptResult& spt) {
  const auto s = spt.root;
  EdgePartition p;
  p.root = s;
  p.branch = spt.first_hop;
  p.edge_class.reserve(g.edge_count());

  for (const Edge& e : g.edges()) {
    const auto x = e.from;
    const auto y = e.to;
    EdgeClass c;
    if (!spt.reachable(x) || !spt.reachable(y)) {
      c = EdgeClass::kUnreachable;
    } else if (y == s) {
      c = EdgeClass::kRootReverse;
    } else if (x == s) {
      c = spt.father_of(y) == s ? EdgeClass::kFirstHop : EdgeClass::kTransverse;
    } else if (spt.father_of(y) == x || spt.father_of(x) == y) {
      c = EdgeClass::kBranch;
    } else if (p.branch_of(x) != p.branch_of(y)) {
      c = EdgeClass::kTransverse;
    } else {
      c = EdgeClass::kInternal;
    }
    p.edge_class.push_back(c);
  }
  return p;
}

}  // namespace mdt
