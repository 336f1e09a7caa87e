#include "mdt/validation.hpp"

#include <algorithm>

namespace mdt {

std::vector<NodeId> ValidatedSet::next_hops(NodeId d) const {
  std::vector<NodeId> out;
  for (const auto& h : at(d)) {
    out.push_back(h.next_hop);
  }
  return out;
}

std::size_t ValidatedSet::total() const {
  std::size_t sum = 0;
  for (const auto& e : entries_) {
    sum += e.size();
  }
  return sum;
}

void ValidatedSet::add(NodeId d, NodeId v, bool primary) {
  auto& list = entries_[d.index()];
  const auto it = std::lower_bound(
      list.begin(), list.end(), v,
      [](const ValidatedHop& h, NodeId x) { return h.next_hop < x; });
  if (it != list.end() && it->next_hop == v) {
    it->primary = it->primary || primary;
    return;
  }
  list.insert(it, {v, primary});
}

namespace {

template <typename Accept>
ValidatedSet validate(const SptResult& spt, std::span<const NodeId> neighbors,
                      Accept&& accept) {
  const auto n = spt.cost.size();
  ValidatedSet out(spt.root, n);
  for (std::size_t i = 0; i < n; ++i) {
    const NodeId d(i);
    if (d == spt.root || !spt.reachable(d)) {
      continue;
    }
    out.add(d, *spt.first_hop_of(d), true);
    for (std::size_t k = 0; k < neighbors.size(); ++k) {
      if (accept(k, d)) {
        out.add(d, neighbors[k], false);
      }
    }
  }
  return out;
}

}  // namespace

ValidatedSet validate_rule1(const KdCosts& kd) {
  // A best path of v through the root costs more than C1(s,d), so comparing
  // the root-avoiding cost gives the same verdict as the full C1(v,d).
  return validate(kd.root_tree, kd.neighbors, [&](std::size_t k, NodeId d) {
    return kd.neighbor_cost(k, d) < kd.root_cost(d);
  });
}

ValidatedSet validate_rule2(const CostMatrix& mc, const SptResult& spt) {
  return validate(spt, mc.neighbors(), [&](std::size_t k, NodeId d) {
    return mc.get(k, d) - mc.link_weight(k) < spt.cost_to(d);
  });
}

ValidatedSet validate_loose(const CostMatrix& mc, const SptResult& spt,
                            Cost slack) {
  return validate(spt, mc.neighbors(), [&](std::size_t k, NodeId d) {
    return mc.get(k, d) - mc.link_weight(k) <= spt.cost_to(d) + slack;
  });
}

ValidatedSet validate_ecmp(const EcmpCandidates& ecmp, const SptResult& spt) {
  ValidatedSet out(spt.root, spt.cost.size());
  for (std::size_t i = 0; i < spt.cost.size(); ++i) {
    const NodeId d(i);
    if (d == spt.root || !spt.reachable(d)) {
      continue;
    }
    const auto primary = *spt.first_hop_of(d);
    for (const auto v : ecmp.at(d)) {
      out.add(d, v, v == primary);
    }
    out.add(d, primary, true);
  }
  return out;
}

std::string_view to_string(Scheme s) {
  switch (s) {
    case Scheme::kEcmp:
      return "ecmp";
    case Scheme::kDtRule2:
      return "dt";
    case Scheme::kMdtRule2:
      return "mdt";
    case Scheme::kKdRule1:
      return "kd";
  }
  return "?";
}

std::optional<Scheme> parse_scheme(std::string_view name) {
  for (const auto s :
       {Scheme::kEcmp, Scheme::kDtRule2, Scheme::kMdtRule2, Scheme::kKdRule1}) {
    if (name == to_string(s)) {
      return s;
    }
  }
  if (name == "dt+rule2") return Scheme::kDtRule2;
  if (name == "mdt+rule2") return Scheme::kMdtRule2;
  if (name == "kd+rule1") return Scheme::kKdRule1;
  return std::nullopt;
}

ValidatedSet validated_next_hops(const Graph& g, NodeId root, Scheme scheme) {
  switch (scheme) {
    case Scheme::kEcmp: {
      const auto r = ecmp_candidates(g, root);
      return validate_ecmp(r.candidates, r.spt);
    }
    case Scheme::kDtRule2: {
      const auto r = dt(g, root);
      return validate_rule2(r.costs, r.spt);
    }
    case Scheme::kMdtRule2: {
      const auto r = mdt(g, root);
      return validate_rule2(r.costs, r.spt);
    }
    case Scheme::kKdRule1:
      return validate_rule1(kd(g, root).costs);
  }
  return {};
}

bool AuditReport::ok() const {
  return first_failure() == nullptr;
}

const ForwardingVerdict* AuditReport::first_failure() const {
  for (const auto& v : destinations) {
    if (!v.ok()) {
      return &v;
    }
  }
  return nullptr;
}

namespace {

std::vector<std::size_t> components(const Graph& g) {
  constexpr auto kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(g.node_count(), kNone);
  std::size_t next_id = 0;
  for (const auto start : g.nodes()) {
    if (comp[start.index()] != kNone) {
      continue;
    }
    std::vector<NodeId> stack{start};
    comp[start.index()] = next_id;
    while (!stack.empty()) {
      const auto x = stack.back();
      stack.pop_back();
      for (const auto& e : g.out_edges(x)) {
        if (comp[e.to.index()] == kNone) {
          comp[e.to.index()] = next_id;
          stack.push_back(e.to);
        }
      }
    }
    ++next_id;
  }
  return comp;
}

ForwardingVerdict check_destination(const std::vector<ValidatedSet>& sets,
                                    const std::vector<std::size_t>& comp,
                                    NodeId d) {
  const auto n = sets.size();
  ForwardingVerdict verdict;
  verdict.destination = d;

  auto next = [&](NodeId x) { return sets[x.index()].next_hops(d); };

  for (std::size_t i = 0; i < n; ++i) {
    const NodeId x(i);
    if (x != d && comp[i] == comp[d.index()] && sets[i].at(d).empty()) {
      verdict.stranded.push_back(x);
    }
  }

  // Iterative three-colour DFS; the grey stack is the current path.
  enum class Colour { kWhite, kGrey, kBlack };
  std::vector<Colour> colour(n, Colour::kWhite);
  for (std::size_t start = 0; start < n && verdict.acyclic; ++start) {
    if (colour[start] != Colour::kWhite || NodeId(start) == d) {
      continue;
    }
    struct Frame {
      NodeId node;
      std::vector<NodeId> succ;
      std::size_t next = 0;
    };
    std::vector<Frame> stack;
    stack.push_back({NodeId(start), next(NodeId(start)), 0});
    colour[start] = Colour::kGrey;
    while (!stack.empty() && verdict.acyclic) {
      auto& top = stack.back();
      if (top.next == top.succ.size()) {
        colour[top.node.index()] = Colour::kBlack;
        stack.pop_back();
        continue;
      }
      const auto y = top.succ[top.next++];
      if (y == d || colour[y.index()] == Colour::kBlack) {
        continue;
      }
      if (colour[y.index()] == Colour::kGrey) {
        verdict.acyclic = false;
        auto it = std::find_if(stack.begin(), stack.end(),
                               [&](const Frame& f) { return f.node == y; });
        for (; it != stack.end(); ++it) {
          verdict.cycle.push_back(it->node);
        }
        verdict.cycle.push_back(y);
        break;
      }
      colour[y.index()] = Colour::kGrey;
      stack.push_back({y, next(y), 0});
    }
  }
  // Without cycles every path ends at d or at a stranded router.
  verdict.reaches_destination = verdict.acyclic && verdict.stranded.empty();
  return verdict;
}

}  // namespace

AuditReport loopfreedom_audit(const Graph& g, const Validator& validator) {
  std::vector<ValidatedSet> sets;
  sets.reserve(g.node_count());
  for (const auto x : g.nodes()) {
    sets.push_back(validator(g, x));
  }
  const auto comp = components(g);
  AuditReport report;
  for (const auto d : g.nodes()) {
    report.destinations.push_back(check_destination(sets, comp, d));
  }
  return report;
}

AuditReport loopfreedom_audit(const Graph& g, Scheme scheme) {
  return loopfreedom_audit(g, [scheme](const Graph& graph, NodeId root) {
    return validated_next_hops(graph, root, scheme);
  });
}

}  // namespace mdt
