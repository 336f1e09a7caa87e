#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "corpus.hpp"
#include "mdt/graph.hpp"

using namespace mdt;

namespace {

std::size_t error_line(const std::string& text) {
  try {
    load_graph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST(LoadGraph, SymmetricByDefault) {
  const auto g = load_graph("a b 5");
  ASSERT_EQ(g.node_count(), 2u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.weight(g.at("a"), g.at("b")), 5.0);
  EXPECT_EQ(g.weight(g.at("b"), g.at("a")), 5.0);
}

TEST(LoadGraph, ReverseWeight) {
  const auto g = load_graph("a b 5 7\n");
  EXPECT_EQ(g.weight(g.at("a"), g.at("b")), 5.0);
  EXPECT_EQ(g.weight(g.at("b"), g.at("a")), 7.0);
}

TEST(LoadGraph, CommentsAndBlankLines) {
  const auto g = load_graph("# header\n\n  x y 1.5  # trailing\n\ty z 2\n");
  EXPECT_EQ(g.node_count(), 3u);
  EXPECT_EQ(g.weight(g.at("x"), g.at("y")), 1.5);
}

TEST(LoadGraph, IndicesFollowFirstAppearance) {
  const auto g = load_graph("q p 1\nr q 1\n");
  EXPECT_EQ(g.at("q"), NodeId(0));
  EXPECT_EQ(g.at("p"), NodeId(1));
  EXPECT_EQ(g.at("r"), NodeId(2));
  EXPECT_EQ(g.label(NodeId(2)), "r");
}

TEST(LoadGraph, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("a b 5\na b 6"), 2u);
  EXPECT_EQ(error_line("a b 5\nb a 6"), 2u);
  EXPECT_EQ(error_line("a a 1"), 1u);
  EXPECT_EQ(error_line("# c\na b 0"), 2u);
  EXPECT_EQ(error_line("a b -3"), 1u);
  EXPECT_EQ(error_line("a b 1\nb c x"), 2u);
  EXPECT_EQ(error_line("a b"), 1u);
  EXPECT_EQ(error_line("a b 1 2 3"), 1u);
  EXPECT_EQ(error_line("a b 1 0"), 1u);
  EXPECT_EQ(error_line("a b 1e"), 1u);
}

TEST(LoadGraph, MissingFile) {
  EXPECT_THROW(load_graph_file("/nonexistent/graph.txt"), GraphError);
}

TEST(Graph, UnknownLabelThrows) {
  const auto g = load_graph("a b 1");
  EXPECT_FALSE(g.find("zz").has_value());
  EXPECT_THROW(g.at("zz"), GraphError);
}

TEST(Graph, OutEdgesSortedAndDegreesMatch) {
  const auto g = partition_example();
  for (const auto x : g.nodes()) {
    const auto out = g.out_edges(x);
    EXPECT_TRUE(std::is_sorted(out.begin(), out.end(),
                               [](const Edge& a, const Edge& b) { return a.to < b.to; }));
    EXPECT_EQ(g.out_degree(x), g.in_degree(x));
    EXPECT_EQ(g.successors(x).size(), g.out_degree(x));
    for (const auto& e : out) {
      EXPECT_EQ(e.from, x);
      EXPECT_TRUE(g.has_edge(e.to, x));
      EXPECT_EQ(g.edges()[*g.edge_index(x, e.to)].to, e.to);
    }
  }
}

TEST(GraphBuilder, RejectsBadLinks) {
  GraphBuilder b;
  const auto a = b.add_node("a");
  const auto c = b.add_node("c");
  EXPECT_EQ(b.add_node("a"), a);
  EXPECT_THROW(b.add_link(a, a, 1), GraphError);
  EXPECT_THROW(b.add_link(a, c, 0), GraphError);
  EXPECT_THROW(b.add_link(a, c, 1, -1), GraphError);
  b.add_link(a, c, 1);
  EXPECT_THROW(b.add_link(c, a, 1), GraphError);
}

TEST(PartitionExample, Shape) {
  const auto g = partition_example();
  EXPECT_EQ(g.node_count(), 16u);
  // Enumerated links: 5 + 5 + 2 in the branches, 3 first-hop,
  // 2 transverse and 1 internal.
  EXPECT_EQ(g.edge_count(), 36u);
  EXPECT_EQ(g.out_degree(g.at("s")), 3u);
  for (const auto& e : g.edges()) {
    EXPECT_EQ(e.weight, 1.0);
  }
  EXPECT_TRUE(is_connected(g));
}

TEST(Serialize, RoundTripExample) {
  const auto g = partition_example();
  EXPECT_EQ(load_graph(serialize(g)), g);
}

TEST(Serialize, KeepsAsymmetricWeights) {
  const auto g = load_graph("a b 2 3\nb c 4\n");
  const auto text = serialize(g);
  EXPECT_EQ(text.substr(0, 8), "a b 2 3\n");
  EXPECT_EQ(load_graph(text), g);
}

TEST(Serialize, RoundTripRandomGraphs) {
  for (const auto& [name, g] : testgen::random_corpus(3, 50)) {
    EXPECT_EQ(load_graph(serialize(g)), g) << name;
  }
}

TEST(Serialize, RoundTripGenerated) {
  TopologyGenSpec spec;
  spec.nodes = 60;
  spec.seed = 5;
  const auto g = generate_topology(spec);
  std::istringstream in(serialize(g));
  EXPECT_EQ(load_graph(in), g);
}

TEST(Bridges, Triangle) {
  const auto r = is_two_edge_connected(load_graph("a b 1\nb c 1\nc a 1"));
  EXPECT_TRUE(r.two_edge_connected);
  EXPECT_TRUE(r.bridges.empty());
}

TEST(Bridges, Path) {
  const auto g = load_graph("a b 1\nb c 1");
  const auto r = is_two_edge_connected(g);
  EXPECT_FALSE(r.two_edge_connected);
  const std::vector<std::pair<NodeId, NodeId>> want{{g.at("a"), g.at("b")},
                                                    {g.at("b"), g.at("c")}};
  EXPECT_EQ(r.bridges, want);
}

TEST(Bridges, Example) {
  const auto g = partition_example();
  const auto r = is_two_edge_connected(g);
  EXPECT_FALSE(r.two_edge_connected);
  const auto want = std::make_pair(std::min(g.at("11"), g.at("d")),
                                   std::max(g.at("11"), g.at("d")));
  EXPECT_NE(std::find(r.bridges.begin(), r.bridges.end(), want), r.bridges.end());
  EXPECT_EQ(r.bridges, testgen::brute_force_bridges(g));
}

TEST(Bridges, DisconnectedThrows) {
  EXPECT_THROW(is_two_edge_connected(load_graph("a b 1\nc d 1")), GraphError);
}

TEST(Bridges, AgreesWithBruteForce) {
  for (const auto& [name, g] : testgen::random_corpus(21, 300)) {
    const auto r = is_two_edge_connected(g);
    const auto brute = testgen::brute_force_bridges(g);
    EXPECT_EQ(r.bridges, brute) << name;
    EXPECT_EQ(r.two_edge_connected, brute.empty()) << name;
  }
}

TEST(Generator, ClustersAndWeights) {
  TopologyGenSpec spec;
  spec.nodes = 100;
  spec.cluster_size = 10;
  spec.seed = 7;
  const auto g = generate_topology(spec);
  EXPECT_EQ(g.node_count(), 100u);
  EXPECT_TRUE(is_connected(g));
  std::set<Cost> weights;
  std::size_t backbone_nodes = 0;
  for (const auto x : g.nodes()) {
    bool on_backbone = false;
    for (const auto& e : g.out_edges(x)) {
      weights.insert(e.weight);
      EXPECT_EQ(g.weight(e.to, x), e.weight);
      on_backbone = on_backbone || e.weight == spec.backbone_weight;
    }
    backbone_nodes += on_backbone ? 1 : 0;
  }
  EXPECT_EQ(weights, (std::set<Cost>{1, 64}));
  // Two backbone routers per cluster.
  EXPECT_EQ(backbone_nodes, 20u);
  // Access links alone split the graph into the clusters.
  GraphBuilder access;
  for (const auto x : g.nodes()) {
    access.add_node(g.label(x));
  }
  for (const auto& e : g.edges()) {
    if (e.from < e.to && e.weight == spec.access_weight) {
      access.add_link(e.from, e.to, e.weight);
    }
  }
  const auto clusters = access.build();
  std::size_t components = 0;
  std::vector<bool> seen(clusters.node_count(), false);
  for (const auto x : clusters.nodes()) {
    if (seen[x.index()]) {
      continue;
    }
    ++components;
    std::vector<NodeId> stack{x};
    seen[x.index()] = true;
    while (!stack.empty()) {
      const auto y = stack.back();
      stack.pop_back();
      for (const auto& e : clusters.out_edges(y)) {
        if (!seen[e.to.index()]) {
          seen[e.to.index()] = true;
          stack.push_back(e.to);
        }
      }
    }
  }
  EXPECT_EQ(components, 10u);
}

TEST(Generator, Deterministic) {
  TopologyGenSpec spec;
  spec.nodes = 20;
  spec.seed = 1;
  EXPECT_EQ(generate_topology(spec), generate_topology(spec));
  auto other = spec;
  other.seed = 2;
  EXPECT_NE(generate_topology(spec), generate_topology(other));
}

TEST(Generator, MeanDegree) {
  for (const std::size_t n : {20, 37, 100, 200}) {
    TopologyGenSpec spec;
    spec.nodes = n;
    spec.seed = 3;
    const auto g = generate_topology(spec);
    const double mean = static_cast<double>(g.edge_count()) / static_cast<double>(n);
    EXPECT_GE(mean, 3.0) << n;
    EXPECT_LE(mean, 5.0) << n;
  }
}

TEST(Generator, InfeasibleSpecs) {
  TopologyGenSpec tiny;
  tiny.nodes = 1;
  EXPECT_THROW(generate_topology(tiny), GraphError);
  TopologyGenSpec dense;
  dense.nodes = 20;
  dense.mean_degree = 15;
  EXPECT_THROW(generate_topology(dense), GraphError);
  TopologyGenSpec cluster_too_big;
  cluster_too_big.nodes = 5;
  cluster_too_big.cluster_size = 10;
  EXPECT_THROW(generate_topology(cluster_too_big), GraphError);
}

TEST(Fixture, ExampleFileMatchesBuiltin) {
  EXPECT_EQ(load_graph_file(MDT_FIXTURE_DIR "/example16.txt"), partition_example());
}
