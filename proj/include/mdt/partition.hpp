#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "mdt/graph.hpp"
#include "mdt/spt.hpp"

namespace mdt {

// kRootReverse tags edges (x, root): the root belongs to no branch, so they
// fall outside the four counted classes. kUnreachable tags edges touching a
// node the tree does not reach.
enum class EdgeClass {
  kFirstHop,
  kBranch,
  kTransverse,
  kInternal,
  kRootReverse,
  kUnreachable,
};

std::string_view to_string(EdgeClass c);

struct EdgePartition {
  NodeId root;
  std::vector<EdgeClass> edge_class;          // indexed like Graph::edges()
  std::vector<std::optional<NodeId>> branch;  // head of the branch holding x

  EdgeClass class_of(const Graph& g, NodeId x, NodeId y) const;
  std::optional<NodeId> branch_of(NodeId x) const { return branch[x.index()]; }
};

// Relative to the tree in `spt`:
//   FirstHop    (root, h) where h's father is the root
//   Branch      a father link (either direction) not incident to the root
//   Transverse  links two branches, or (root, n) with n not a branch head
//   Internal    both ends in one branch, not a father link
EdgePartition classify_edges(const Graph& g, const SptResult& spt);

}  // namespace mdt
