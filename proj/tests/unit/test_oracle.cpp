#include <gtest/gtest.h>

#include "corpus.hpp"
#include "mdt/oracle.hpp"
#include "mdt/partition.hpp"

using namespace mdt;

namespace {

std::size_t slot_of(const OracleCosts& o, NodeId v) {
  return static_cast<std::size_t>(
      std::find(o.neighbors.begin(), o.neighbors.end(), v) - o.neighbors.begin());
}

}  // namespace

TEST(Oracle, ExampleFirstHopCosts) {
  const auto g = partition_example();
  const auto s = g.at("s");
  const auto o = oracle_first_hop_costs(g, s, g.node_count());
  EXPECT_EQ(o.via_cost(slot_of(o, g.at("1")), g.at("c")), 3);
  // s,6,1,b,c,11,d: the cheaper-looking 6,s,n,... goes back through s.
  EXPECT_EQ(o.via_cost(slot_of(o, g.at("6")), g.at("d")), 6);
  EXPECT_EQ(o.best(g.at("d")), 3);
  EXPECT_TRUE(o.alternate_exists(g.at("d")));
}

TEST(Oracle, TwoNodes) {
  const auto g = load_graph("s a 7");
  const auto o = oracle_first_hop_costs(g, g.at("s"));
  EXPECT_EQ(o.via_cost(0, g.at("a")), 7);
  EXPECT_FALSE(o.alternate_exists(g.at("a")));
}

TEST(Oracle, SizeGuard) {
  const auto g = partition_example();
  EXPECT_THROW(oracle_first_hop_costs(g, g.at("s")), OracleLimitError);
  const auto spt = dijkstra(g, g.at("s"));
  EXPECT_THROW(oracle_transverse_costs(g, spt, classify_edges(g, spt)),
               OracleLimitError);
}

TEST(Oracle, EnumeratesEverySimplePath) {
  const auto g = load_graph("a b 1\nb c 2\nc a 4");
  std::vector<std::pair<std::size_t, Cost>> seen;
  for_each_simple_path(g, g.at("a"), [&](std::span<const NodeId> p, Cost c) {
    seen.emplace_back(p.size(), c);
  });
  // a-b, a-b-c, a-c, a-c-b
  const std::vector<std::pair<std::size_t, Cost>> want{{2, 1}, {3, 3}, {2, 4}, {3, 6}};
  EXPECT_EQ(seen, want);
}

TEST(Oracle, MethodsAgree) {
  auto corpus = testgen::random_corpus(81, 200);
  for (auto& ng : testgen::two_edge_corpus(82, 50)) {
    corpus.push_back(std::move(ng));
  }
  for (const auto& [name, g] : corpus) {
    for (const auto s : g.nodes()) {
      const auto a = oracle_first_hop_costs(g, s);
      const auto b = oracle_first_hop_costs_by_removal(g, s);
      ASSERT_EQ(a.neighbors, b.neighbors);
      for (std::size_t k = 0; k < a.neighbors.size(); ++k) {
        for (const auto d : g.nodes()) {
          if (d != s) {
            ASSERT_EQ(a.via_cost(k, d), b.via_cost(k, d)) << name;
          }
        }
      }
    }
  }
}

TEST(ClosestCommonAncestor, Example) {
  const auto g = partition_example();
  const auto spt = dijkstra(g, g.at("s"));
  EXPECT_EQ(closest_common_ancestor(spt, g.at("c"), g.at("d")), g.at("n"));
  EXPECT_EQ(closest_common_ancestor(spt, g.at("b"), g.at("4")), g.at("b"));
  EXPECT_EQ(closest_common_ancestor(spt, g.at("9"), g.at("9")), g.at("9"));
  EXPECT_EQ(closest_common_ancestor(spt, g.at("4"), g.at("7")), g.at("s"));
  const std::vector<NodeId> path{g.at("s"), g.at("1"), g.at("b"), g.at("2"), g.at("4")};
  EXPECT_EQ(tree_path(spt, g.at("4")), path);
}

TEST(TransverseClasses, ExampleShapes) {
  const auto g = partition_example();
  const auto spt = dijkstra(g, g.at("s"));
  const auto t = oracle_transverse_costs(g, spt, classify_edges(g, spt), g.node_count());
  const auto one = static_cast<std::size_t>(
      std::find(t.neighbors.begin(), t.neighbors.end(), g.at("1")) - t.neighbors.begin());
  EXPECT_EQ(t.simple[t.at(one, g.at("c"))], 3);
  EXPECT_EQ(t.backward[t.at(one, g.at("n"))], 4);
  EXPECT_EQ(t.forward[t.at(one, g.at("d"))], 6);
  const auto six = static_cast<std::size_t>(
      std::find(t.neighbors.begin(), t.neighbors.end(), g.at("6")) - t.neighbors.begin());
  EXPECT_EQ(t.forward[t.at(six, g.at("b"))], 3);
  EXPECT_EQ(t.class_min(six, g.at("d")), kInfinity);
}

// Classifies every simple path from s and checks the class minima against it.
TEST(TransverseClasses, OneTransverseBoundsOnCorpus) {
  for (const auto& [name, g] : testgen::random_corpus(83, 120)) {
    for (const auto s : g.nodes()) {
      const auto spt = dijkstra(g, s);
      const auto part = classify_edges(g, spt);
      const auto t = oracle_transverse_costs(g, spt, part);
      const auto all = oracle_first_hop_costs(g, s);
      for (std::size_t k = 0; k < t.neighbors.size(); ++k) {
        for (const auto d : g.nodes()) {
          if (d != s) {
            EXPECT_GE(t.class_min(k, d), all.via_cost(k, d)) << name;
          }
        }
      }
      for_each_simple_path(g, s, [&](std::span<const NodeId> p, Cost cost) {
        const auto d = p.back();
        const auto first = p[1];
        if (first == *spt.first_hop_of(d)) {
          return;
        }
        std::size_t transverse = 0;
        bool internal = false;
        for (std::size_t i = 1; i < p.size(); ++i) {
          const auto c = part.class_of(g, p[i - 1], p[i]);
          transverse += c == EdgeClass::kTransverse ? 1 : 0;
          internal = internal || c == EdgeClass::kInternal;
        }
        if (transverse == 0 || internal) {
          return;
        }
        // Some alternate first hop has a one-transverse path at most as
        // expensive.
        Cost best_other = kInfinity;
        for (std::size_t k = 0; k < t.neighbors.size(); ++k) {
          if (t.neighbors[k] != *spt.first_hop_of(d)) {
            best_other = std::min(best_other, t.transverse_min(k, d));
          }
        }
        EXPECT_LE(best_other, cost) << name;
        if (transverse == 1) {
          const auto k = static_cast<std::size_t>(
              std::find(t.neighbors.begin(), t.neighbors.end(), first) -
              t.neighbors.begin());
          EXPECT_LE(t.class_min(k, d), cost) << name;
        }
      });
    }
  }
}
