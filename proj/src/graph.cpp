#include "mdt/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "mdt/random.hpp"

namespace mdt {

namespace {

std::uint64_t pair_key(NodeId u, NodeId v) {
  return (static_cast<std::uint64_t>(u.value) << 32) | v.value;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) {
      ++pos;
    }
    const auto start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') {
      ++pos;
    }
    if (pos > start) {
      fields.push_back(line.substr(start, pos - start));
    }
  }
  return fields;
}

std::optional<Cost> parse_weight(std::string_view field) {
  Cost value = 0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc{} || ptr != end || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : GraphError(fmt::format("line {}: {}", line, what)), line_(line) {}

std::span<const Edge> Graph::out_edges(NodeId x) const {
  const auto i = x.index();
  return std::span<const Edge>(edges_).subspan(offsets_[i],
                                               offsets_[i + 1] - offsets_[i]);
}

std::optional<std::size_t> Graph::edge_index(NodeId x, NodeId y) const {
  const auto out = out_edges(x);
  const auto it = std::lower_bound(
      out.begin(), out.end(), y,
      [](const Edge& e, NodeId target) { return e.to < target; });
  if (it == out.end() || it->to != y) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(&*it - edges_.data());
}

std::optional<Cost> Graph::weight(NodeId x, NodeId y) const {
  if (const auto i = edge_index(x, y)) {
    return edges_[*i].weight;
  }
  return std::nullopt;
}

std::optional<NodeId> Graph::find(std::string_view label) const {
  const auto it = index_.find(std::string(label));
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

NodeId Graph::at(std::string_view label) const {
  if (auto id = find(label)) {
    return *id;
  }
  throw GraphError(fmt::format("unknown node '{}'", label));
}

std::vector<NodeId> Graph::nodes() const {
  std::vector<NodeId> out;
  out.reserve(node_count());
  for (std::size_t i = 0; i < node_count(); ++i) {
    out.emplace_back(i);
  }
  return out;
}

std::vector<NodeId> Graph::successors(NodeId x) const {
  std::vector<NodeId> out;
  for (const auto& e : out_edges(x)) {
    out.push_back(e.to);
  }
  return out;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.labels_ != b.labels_ || a.edges_.size() != b.edges_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.edges_.size(); ++i) {
    const auto& ea = a.edges_[i];
    const auto& eb = b.edges_[i];
    if (ea.from != eb.from || ea.to != eb.to || ea.weight != eb.weight) {
      return false;
    }
  }
  return true;
}

NodeId GraphBuilder::add_node(std::string_view label) {
  std::string key(label);
  if (auto it = index_.find(key); it != index_.end()) {
    return it->second;
  }
  const NodeId id(labels_.size());
  labels_.push_back(key);
  index_.emplace(std::move(key), id);
  return id;
}

bool GraphBuilder::has_edge(NodeId u, NodeId v) const {
  return pairs_.contains(pair_key(u, v));
}

void GraphBuilder::add_link(NodeId u, NodeId v, Cost weight,
                            std::optional<Cost> reverse_weight) {
  const Cost back = reverse_weight.value_or(weight);
  if (u.index() >= labels_.size() || v.index() >= labels_.size()) {
    throw GraphError("link references an unknown node");
  }
  if (u == v) {
    throw GraphError(fmt::format("self-loop on '{}'", labels_[u.index()]));
  }
  if (!(weight > 0) || !(back > 0) || !std::isfinite(weight) ||
      !std::isfinite(back)) {
    throw GraphError(fmt::format("non-positive weight on link {} {}",
                                 labels_[u.index()], labels_[v.index()]));
  }
  if (has_edge(u, v) || has_edge(v, u)) {
    throw GraphError(fmt::format("duplicate edge {} {}", labels_[u.index()],
                                 labels_[v.index()]));
  }
  pairs_.emplace(pair_key(u, v), edges_.size());
  edges_.push_back({u, v, weight});
  pairs_.emplace(pair_key(v, u), edges_.size());
  edges_.push_back({v, u, back});
}

void GraphBuilder::add_link(std::string_view u, std::string_view v, Cost weight,
                            std::optional<Cost> reverse_weight) {
  const auto a = add_node(u);
  const auto b = add_node(v);
  add_link(a, b, weight, reverse_weight);
}

Graph GraphBuilder::build() const {
  Graph g;
  g.labels_ = labels_;
  g.index_ = index_;
  g.edges_ = edges_;
  std::sort(g.edges_.begin(), g.edges_.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.from, a.to) < std::tie(b.from, b.to);
  });
  const auto n = labels_.size();
  g.offsets_.assign(n + 1, 0);
  g.in_degree_.assign(n, 0);
  for (const auto& e : g.edges_) {
    ++g.offsets_[e.from.index() + 1];
    ++g.in_degree_[e.to.index()];
  }
  for (std::size_t i = 0; i < n; ++i) {
    g.offsets_[i + 1] += g.offsets_[i];
  }
  return g;
}

Graph load_graph(std::istream& in) {
  GraphBuilder builder;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    const auto fields = split_fields(line);
    if (fields.size() < 3 || fields.size() > 4) {
      throw ParseError(line_no, "expected 'u v w [w_rev]'");
    }
    const auto w = parse_weight(fields[2]);
    if (!w) {
      throw ParseError(line_no, fmt::format("bad weight '{}'", fields[2]));
    }
    std::optional<Cost> w_rev;
    if (fields.size() == 4) {
      w_rev = parse_weight(fields[3]);
      if (!w_rev) {
        throw ParseError(line_no,
                         fmt::format("bad reverse weight '{}'", fields[3]));
      }
    }
    if (fields[0] == fields[1]) {
      throw ParseError(line_no, fmt::format("self-loop on '{}'", fields[0]));
    }
    if (*w <= 0 || w_rev.value_or(1) <= 0) {
      throw ParseError(line_no, "non-positive weight");
    }
    try {
      builder.add_link(fields[0], fields[1], *w, w_rev);
    } catch (const GraphError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return builder.build();
}

Graph load_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return load_graph(in);
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw GraphError(fmt::format("cannot open '{}'", path));
  }
  return load_graph(in);
}

std::string serialize(const Graph& g) {
  const auto n = g.node_count();
  std::vector<bool> seen(n, false);
  std::vector<bool> emitted(g.edge_count(), false);
  std::string out;

  auto edge_pos = [&](NodeId x, NodeId y) { return *g.edge_index(x, y); };
  auto emit = [&](NodeId u, NodeId v) {
    const auto fwd = edge_pos(u, v);
    const auto back = edge_pos(v, u);
    emitted[fwd] = emitted[back] = true;
    seen[u.index()] = seen[v.index()] = true;
    const Cost w = g.edges()[fwd].weight;
    const Cost w_rev = g.edges()[back].weight;
    if (w == w_rev) {
      out += fmt::format("{} {} {}\n", g.label(u), g.label(v), w);
    } else {
      out += fmt::format("{} {} {} {}\n", g.label(u), g.label(v), w, w_rev);
    }
  };

  // Introduce nodes in index order: node p appears through a link to an
  // already introduced node, or together with p+1.
  for (std::size_t p = 0; p < n; ++p) {
    if (seen[p]) {
      continue;
    }
    const NodeId x(p);
    bool done = false;
    for (const auto& e : g.out_edges(x)) {
      if (e.to.index() < p && seen[e.to.index()]) {
        emit(x, e.to);
        done = true;
        break;
      }
    }
    if (!done && p + 1 < n && g.has_edge(x, NodeId(p + 1))) {
      emit(x, NodeId(p + 1));
    }
  }
  for (const auto& e : g.edges()) {
    const auto pos = static_cast<std::size_t>(&e - g.edges().data());
    if (!emitted[pos] && e.from < e.to) {
      emit(e.from, e.to);
    }
  }
  return out;
}

Graph partition_example() {
  GraphBuilder b;
  for (const char* label : {"s", "1", "n", "6", "b", "2", "3", "4", "5", "c",
                            "11", "9", "10", "d", "7", "8"}) {
    b.add_node(label);
  }
  const std::pair<const char*, const char*> links[] = {
      // first hops
      {"s", "1"}, {"s", "n"}, {"s", "6"},
      // branch of 1
      {"1", "b"}, {"b", "2"}, {"b", "3"}, {"2", "4"}, {"2", "5"},
      // branch of n
      {"n", "c"}, {"n", "11"}, {"c", "9"}, {"c", "10"}, {"11", "d"},
      // branch of 6
      {"6", "7"}, {"6", "8"},
      // t1, t2 and the internal link i
      {"6", "1"}, {"b", "c"}, {"c", "11"},
  };
  for (const auto& [u, v] : links) {
    b.add_link(u, v, 1.0);
  }
  return b.build();
}

bool is_connected(const Graph& g) {
  const auto n = g.node_count();
  if (n == 0) {
    return true;
  }
  std::vector<bool> seen(n, false);
  std::vector<NodeId> stack{NodeId(0)};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const auto x = stack.back();
    stack.pop_back();
    for (const auto& e : g.out_edges(x)) {
      if (!seen[e.to.index()]) {
        seen[e.to.index()] = true;
        ++count;
        stack.push_back(e.to);
      }
    }
  }
  return count == n;
}

BridgeReport is_two_edge_connected(const Graph& g) {
  if (!is_connected(g)) {
    throw GraphError("bridge search needs a connected graph");
  }
  const auto n = g.node_count();
  BridgeReport report;
  if (n == 0) {
    return report;
  }
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> disc(n, kUnvisited);
  std::vector<std::size_t> low(n, 0);
  std::size_t timer = 0;

  // Iterative Tarjan low-link; simple graph, so skipping the parent node is
  // enough to ignore the tree edge itself.
  struct Frame {
    NodeId node;
    std::optional<NodeId> parent;
    std::size_t next = 0;
  };
  std::vector<Frame> stack;
  disc[0] = low[0] = timer++;
  stack.push_back({NodeId(0), std::nullopt, 0});
  while (!stack.empty()) {
    auto& frame = stack.back();
    const auto out = g.out_edges(frame.node);
    if (frame.next < out.size()) {
      const auto y = out[frame.next++].to;
      if (frame.parent && y == *frame.parent) {
        continue;
      }
      if (disc[y.index()] == kUnvisited) {
        disc[y.index()] = low[y.index()] = timer++;
        stack.push_back({y, frame.node, 0});
      } else {
        low[frame.node.index()] =
            std::min(low[frame.node.index()], disc[y.index()]);
      }
      continue;
    }
    const auto child = frame.node;
    const auto parent = frame.parent;
    stack.pop_back();
    if (parent) {
      auto& lp = low[parent->index()];
      lp = std::min(lp, low[child.index()]);
      if (low[child.index()] > disc[parent->index()]) {
        report.bridges.emplace_back(std::min(*parent, child),
                                    std::max(*parent, child));
      }
    }
  }
  std::sort(report.bridges.begin(), report.bridges.end());
  report.two_edge_connected = report.bridges.empty();
  return report;
}

Graph generate_topology(const TopologyGenSpec& spec) {
  const auto n = spec.nodes;
  if (spec.cluster_size < 2 || n < spec.cluster_size) {
    throw GraphError("topology needs node count >= cluster size >= 2");
  }
  if (!(spec.access_weight > 0) || !(spec.backbone_weight > 0)) {
    throw GraphError("topology weights must be positive");
  }
  const auto clusters = (n + spec.cluster_size - 1) / spec.cluster_size;

  // Cluster c holds the contiguous index range [first[c], first[c+1]); its
  // first two members are its backbone routers.
  std::vector<std::size_t> first(clusters + 1, 0);
  for (std::size_t c = 0; c < clusters; ++c) {
    first[c + 1] = first[c] + n / clusters + (c < n % clusters ? 1 : 0);
  }

  struct Link {
    std::size_t u;
    std::size_t v;
    bool backbone;
  };
  std::vector<Link> links;
  std::vector<std::vector<bool>> adjacent(n, std::vector<bool>(n, false));
  auto add = [&](std::size_t u, std::size_t v, bool backbone) {
    if (u != v && !adjacent[u][v]) {
      adjacent[u][v] = adjacent[v][u] = true;
      links.push_back({u, v, backbone});
    }
  };
  auto ring = [&](const std::vector<std::size_t>& members, bool backbone) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      add(members[i], members[(i + 1) % members.size()], backbone);
    }
  };

  std::vector<std::size_t> heads;
  for (std::size_t c = 0; c < clusters; ++c) {
    for (auto i = first[c]; i < std::min(first[c] + 2, first[c + 1]); ++i) {
      heads.push_back(i);
    }
  }
  // Backbone first so every head links to a lower-indexed node. The access
  // ring then runs from one backbone router of the cluster to the other.
  ring(heads, true);
  for (std::size_t c = 0; c < clusters; ++c) {
    std::vector<std::size_t> members;
    for (auto i = first[c]; i < first[c + 1]; ++i) {
      members.push_back(i);
    }
    ring(members, false);
  }

  std::vector<Link> pool;
  for (std::size_t c = 0; c < clusters; ++c) {
    for (auto i = first[c]; i < first[c + 1]; ++i) {
      for (auto j = i + 1; j < first[c + 1]; ++j) {
        if (!adjacent[i][j]) {
          pool.push_back({i, j, false});
        }
      }
    }
  }
  for (std::size_t a = 0; a < heads.size(); ++a) {
    for (auto b = a + 1; b < heads.size(); ++b) {
      if (!adjacent[heads[a]][heads[b]]) {
        pool.push_back({heads[a], heads[b], true});
      }
    }
  }

  const auto target = static_cast<std::size_t>(
      std::llround(spec.mean_degree * static_cast<double>(n) / 2.0));
  auto mean_degree = [n](std::size_t link_count) {
    return 2.0 * static_cast<double>(link_count) / static_cast<double>(n);
  };
  const auto base = links.size();
  const auto wanted = std::max(base, target);
  if (wanted > base + pool.size() ||
      std::abs(mean_degree(wanted) - spec.mean_degree) > 1.0) {
    throw GraphError(fmt::format(
        "mean degree {} is infeasible for {} nodes in clusters of {}",
        spec.mean_degree, n, spec.cluster_size));
  }

  Rng rng(spec.seed);
  shuffle(rng, std::span<Link>(pool));
  links.insert(links.end(), pool.begin(),
               pool.begin() + static_cast<std::ptrdiff_t>(wanted - base));

  GraphBuilder b;
  for (std::size_t i = 0; i < n; ++i) {
    b.add_node(fmt::format("r{}", i));
  }
  for (const auto& l : links) {
    b.add_link(NodeId(l.u), NodeId(l.v),
               l.backbone ? spec.backbone_weight : spec.access_weight);
  }
  return b.build();
}

}  // namespace mdt
