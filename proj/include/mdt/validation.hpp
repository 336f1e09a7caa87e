#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "mdt/graph.hpp"
#include "mdt/kd.hpp"
#include "mdt/spt.hpp"
#include "mdt/transverse.hpp"

namespace mdt {

struct ValidatedHop {
  NodeId next_hop;
  bool primary = false;

  friend bool operator==(const ValidatedHop&, const ValidatedHop&) = default;
};

// Next hops a root may forward on, per destination, sorted by index. The
// primary next hop is always present for a reachable destination.
class ValidatedSet {
 public:
  ValidatedSet() = default;
  ValidatedSet(NodeId root, std::size_t node_count)
      : root_(root), entries_(node_count) {}

  NodeId root() const { return root_; }
  std::size_t node_count() const { return entries_.size(); }
  const std::vector<ValidatedHop>& at(NodeId d) const {
    return entries_[d.index()];
  }
  std::vector<NodeId> next_hops(NodeId d) const;
  std::size_t total() const;

  // Adds v (keeps index order); a primary flag sticks once set.
  void add(NodeId d, NodeId v, bool primary);

 private:
  NodeId root_;
  std::vector<std::vector<ValidatedHop>> entries_;
};

// Downstream criterion on exact costs: C1(v,d) < C1(s,d).
ValidatedSet validate_rule1(const KdCosts& kd);

// Downstream criterion on overestimates: Mc(v,d) - w(s,v) < Tc(d).
ValidatedSet validate_rule2(const CostMatrix& mc, const SptResult& spt);

// Negative control, not loop-free: Mc(v,d) - w(s,v) <= Tc(d) + slack.
ValidatedSet validate_loose(const CostMatrix& mc, const SptResult& spt,
                            Cost slack = 1);

// Equal-cost next hops need no further check.
ValidatedSet validate_ecmp(const EcmpCandidates& ecmp, const SptResult& spt);

enum class Scheme { kEcmp, kDtRule2, kMdtRule2, kKdRule1 };

std::string_view to_string(Scheme s);
std::optional<Scheme> parse_scheme(std::string_view name);

ValidatedSet validated_next_hops(const Graph& g, NodeId root, Scheme scheme);

using Validator = std::function<ValidatedSet(const Graph&, NodeId)>;

struct ForwardingVerdict {
  NodeId destination;
  bool acyclic = true;
  bool reaches_destination = true;
  std::vector<NodeId> cycle;     // first cycle found, closed (front == back)
  std::vector<NodeId> stranded;  // routers with a finite cost but no next hop

  bool ok() const { return acyclic && reaches_destination; }
};

struct AuditReport {
  std::vector<ForwardingVerdict> destinations;

  bool ok() const;
  const ForwardingVerdict* first_failure() const;
};

// For every destination d, joins the validated next hops of every router into
// one forwarding graph and checks that it is acyclic and that every router
// with a route reaches d.
AuditReport loopfreedom_audit(const Graph& g, Scheme scheme);
AuditReport loopfreedom_audit(const Graph& g, const Validator& validator);

}  // namespace mdt
