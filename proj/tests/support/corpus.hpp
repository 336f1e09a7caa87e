#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mdt/graph.hpp"
#include "mdt/random.hpp"

namespace mdt::testgen {

struct NamedGraph {
  std::string name;
  Graph graph;
};

// Random spanning tree plus each remaining pair with probability `extra`.
// Symmetric integer weights drawn from [wmin, wmax].
Graph random_connected(Rng& rng, std::size_t n, int wmin, int wmax,
                       double extra = 0.25);

// Same links, every weight replaced by `w`.
Graph with_constant_weight(const Graph& g, Cost w);

// random_connected, then random links at bridge endpoints until none is left.
Graph random_two_edge_connected(Rng& rng, std::size_t n, int wmin, int wmax);

// Removes each link in turn and checks connectivity.
std::vector<std::pair<NodeId, NodeId>> brute_force_bridges(const Graph& g);

// 6-12 nodes, weights 1-10.
std::vector<NamedGraph> random_corpus(std::uint64_t seed, std::size_t count);
std::vector<NamedGraph> two_edge_corpus(std::uint64_t seed, std::size_t count);
// Unit weights and weight 7 over the topologies of a random corpus.
std::vector<NamedGraph> constant_weight_corpus(std::uint64_t seed,
                                               std::size_t count);

// The graphs used by the corpus-wide checks: example plus the three corpora.
std::vector<NamedGraph> full_corpus();

// A graph and root where some ECMP next hop toward a destination is missing
// from DT's candidates but present in mDT's.
struct SeparationWitness {
  std::uint64_t seed = 0;
  Graph graph;
  NodeId root;
  NodeId destination;
  NodeId missed_hop;
};

std::optional<SeparationWitness> separation_at(const Graph& g);
std::optional<SeparationWitness> find_separation_witness(std::uint64_t max_seeds);

}  // namespace mdt::testgen
