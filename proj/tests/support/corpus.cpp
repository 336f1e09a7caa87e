#include "corpus.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "mdt/spt.hpp"
#include "mdt/transverse.hpp"

namespace mdt::testgen {

namespace {

bool connected_without(const Graph& g, NodeId a, NodeId b) {
  std::vector<bool> seen(g.node_count(), false);
  std::vector<NodeId> stack{NodeId(0)};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const auto x = stack.back();
    stack.pop_back();
    for (const auto& e : g.out_edges(x)) {
      if ((x == a && e.to == b) || (x == b && e.to == a) || seen[e.to.index()]) {
        continue;
      }
      seen[e.to.index()] = true;
      ++count;
      stack.push_back(e.to);
    }
  }
  return count == g.node_count();
}

GraphBuilder nodes_only(std::size_t n) {
  GraphBuilder b;
  for (std::size_t i = 0; i < n; ++i) {
    b.add_node(fmt::format("v{}", i));
  }
  return b;
}

Cost draw_weight(Rng& rng, int wmin, int wmax) {
  return static_cast<Cost>(uniform_between(rng, wmin, wmax));
}

}  // namespace

Graph random_connected(Rng& rng, std::size_t n, int wmin, int wmax,
                       double extra) {
  auto b = nodes_only(n);
  for (std::size_t i = 1; i < n; ++i) {
    const auto j = uniform_below(rng, i);
    b.add_link(NodeId(i), NodeId(j), draw_weight(rng, wmin, wmax));
  }
  const auto threshold = static_cast<std::uint64_t>(extra * 1000);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!b.has_edge(NodeId(i), NodeId(j)) &&
          uniform_below(rng, 1000) < threshold) {
        b.add_link(NodeId(i), NodeId(j), draw_weight(rng, wmin, wmax));
      }
    }
  }
  return b.build();
}

Graph with_constant_weight(const Graph& g, Cost w) {
  auto b = nodes_only(0);
  for (const auto x : g.nodes()) {
    b.add_node(g.label(x));
  }
  for (const auto& e : g.edges()) {
    if (e.from < e.to) {
      b.add_link(e.from, e.to, w);
    }
  }
  return b.build();
}

Graph random_two_edge_connected(Rng& rng, std::size_t n, int wmin, int wmax) {
  auto g = random_connected(rng, n, wmin, wmax);
  for (auto report = is_two_edge_connected(g); !report.two_edge_connected;
       report = is_two_edge_connected(g)) {
    GraphBuilder b;
    for (const auto x : g.nodes()) {
      b.add_node(g.label(x));
    }
    for (const auto& e : g.edges()) {
      if (e.from < e.to) {
        b.add_link(e.from, e.to, e.weight);
      }
    }
    // Close a cycle around one endpoint of the first bridge. Both ends can't
    // be adjacent to everything, or the link would not be a bridge.
    auto end = report.bridges.front().first;
    std::vector<NodeId> options;
    for (const auto candidate : {end, report.bridges.front().second}) {
      end = candidate;
      for (const auto y : g.nodes()) {
        if (y != end && !g.has_edge(end, y)) {
          options.push_back(y);
        }
      }
      if (!options.empty()) {
        break;
      }
    }
    const auto y = options[uniform_below(rng, options.size())];
    b.add_link(end, y, draw_weight(rng, wmin, wmax));
    g = b.build();
  }
  return g;
}

std::vector<std::pair<NodeId, NodeId>> brute_force_bridges(const Graph& g) {
  std::vector<std::pair<NodeId, NodeId>> out;
  for (const auto& e : g.edges()) {
    if (e.from < e.to && !connected_without(g, e.from, e.to)) {
      out.emplace_back(e.from, e.to);
    }
  }
  return out;
}

std::vector<NamedGraph> random_corpus(std::uint64_t seed, std::size_t count) {
  Rng rng(seed);
  std::vector<NamedGraph> out;
  for (std::size_t i = 0; i < count; ++i) {
    const auto n = static_cast<std::size_t>(uniform_between(rng, 6, 12));
    out.push_back({fmt::format("random-{}-{}", seed, i),
                   random_connected(rng, n, 1, 10)});
  }
  return out;
}

std::vector<NamedGraph> two_edge_corpus(std::uint64_t seed, std::size_t count) {
  Rng rng(seed);
  std::vector<NamedGraph> out;
  for (std::size_t i = 0; i < count; ++i) {
    const auto n = static_cast<std::size_t>(uniform_between(rng, 6, 12));
    out.push_back({fmt::format("bridgeless-{}-{}", seed, i),
                   random_two_edge_connected(rng, n, 1, 10)});
  }
  return out;
}

std::vector<NamedGraph> constant_weight_corpus(std::uint64_t seed,
                                               std::size_t count) {
  std::vector<NamedGraph> out;
  for (auto& [name, g] : random_corpus(seed, count)) {
    out.push_back({name + "-w1", with_constant_weight(g, 1)});
    out.push_back({name + "-w7", with_constant_weight(g, 7)});
  }
  return out;
}

std::vector<NamedGraph> full_corpus() {
  std::vector<NamedGraph> out;
  out.push_back({"example", partition_example()});
  for (auto&& part : {random_corpus(11, 200), two_edge_corpus(12, 100),
                      constant_weight_corpus(13, 50)}) {
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::optional<SeparationWitness> separation_at(const Graph& g) {
  for (const auto s : g.nodes()) {
    const auto ec = ecmp_candidates(g, s);
    const auto dt_run = dt(g, s);
    const auto mdt_run = mdt::mdt(g, s);
    for (const auto d : g.nodes()) {
      if (d == s) {
        continue;
      }
      const auto dt_hops = dt_run.candidates.next_hops(d);
      const auto mdt_hops = mdt_run.candidates.next_hops(d);
      for (const auto v : ec.candidates.at(d)) {
        const bool in_dt = std::binary_search(dt_hops.begin(), dt_hops.end(), v);
        const bool in_mdt =
            std::binary_search(mdt_hops.begin(), mdt_hops.end(), v);
        if (!in_dt && in_mdt) {
          return SeparationWitness{0, g, s, d, v};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<SeparationWitness> find_separation_witness(std::uint64_t max_seeds) {
  for (std::uint64_t seed = 1; seed <= max_seeds; ++seed) {
    Rng rng(seed);
    const auto n = static_cast<std::size_t>(uniform_between(rng, 5, 10));
    // Small weights make equal-cost paths common.
    auto w = separation_at(random_connected(rng, n, 1, 3));
    if (w) {
      w->seed = seed;
      return w;
    }
  }
  return std::nullopt;
}

}  // namespace mdt::testgen
