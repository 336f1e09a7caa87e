#include <gtest/gtest.h>

#include "corpus.hpp"
#include "mdt/kd.hpp"
#include "mdt/oracle.hpp"

using namespace mdt;

TEST(Kd, ExampleDestinations) {
  const auto g = partition_example();
  const auto r = kd(g, g.at("s"));
  // Via 6 the best root-avoiding route to d is 6,1,b,c,11,d or 6,1,b,c,n,11,d.
  const std::vector<Candidate> to_d{{g.at("n"), 3}, {g.at("1"), 5}, {g.at("6"), 6}};
  const std::vector<Candidate> to_c{{g.at("n"), 2}, {g.at("1"), 3}, {g.at("6"), 4}};
  EXPECT_EQ(r.candidates.at(g.at("d")), to_d);
  EXPECT_EQ(r.candidates.at(g.at("c")), to_c);
}

TEST(Kd, TwoNodes) {
  const auto g = load_graph("s a 4");
  const auto r = kd(g, g.at("s"));
  const std::vector<Candidate> want{{g.at("a"), 4}};
  EXPECT_EQ(r.candidates.at(g.at("a")), want);
  EXPECT_EQ(r.run_ops.size(), 2u);
}

TEST(Kd, RunsAddUp) {
  for (const auto& [name, g] : testgen::random_corpus(61, 40)) {
    for (const auto s : g.nodes()) {
      const auto r = kd(g, s);
      ASSERT_EQ(r.run_ops.size(), g.out_degree(s) + 1);
      OpCounter sum;
      for (const auto& o : r.run_ops) {
        sum += o;
      }
      EXPECT_EQ(sum, r.ops);
      OpCounter root_run;
      dijkstra(g, s, root_run);
      EXPECT_EQ(r.run_ops.front(), root_run);
      const auto neighbors = g.successors(s);
      for (std::size_t k = 0; k < neighbors.size(); ++k) {
        OpCounter run;
        dijkstra(g, neighbors[k], run, s);
        EXPECT_EQ(r.run_ops[k + 1], run) << name;
      }
    }
  }
}

TEST(Kd, ExactAgainstBothOracles) {
  for (const auto& [name, g] : testgen::random_corpus(62, 200)) {
    for (const auto s : g.nodes()) {
      const auto r = kd(g, s);
      const auto dfs = oracle_first_hop_costs(g, s);
      const auto removal = oracle_first_hop_costs_by_removal(g, s);
      for (std::size_t k = 0; k < r.costs.neighbors.size(); ++k) {
        for (const auto d : g.nodes()) {
          if (d == s) {
            continue;
          }
          ASSERT_EQ(r.costs.via_cost(k, d), dfs.via_cost(k, d)) << name;
          EXPECT_EQ(r.matrix.get(k, d), removal.via_cost(k, d));
          EXPECT_GE(r.costs.via_cost(k, d), r.costs.root_cost(d));
        }
      }
      for (const auto d : g.nodes()) {
        if (d != s) {
          const auto nh1 = *r.costs.root_tree.first_hop_of(d);
          EXPECT_EQ(r.matrix.at(nh1, d), r.costs.root_cost(d));
        }
      }
    }
  }
}
