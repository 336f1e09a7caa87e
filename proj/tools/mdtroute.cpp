#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "mdt/eval.hpp"
#include "mdt/kd.hpp"
#include "mdt/oracle.hpp"
#include "mdt/partition.hpp"
#include "mdt/spt.hpp"
#include "mdt/transverse.hpp"
#include "mdt/validation.hpp"

using namespace mdt;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string topo;
  std::uint64_t seed = 1;
  std::string out;
};

// stdout unless --out names a file.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) {
        throw InputError(fmt::format("cannot write '{}'", path));
      }
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  void write(const std::string& text) {
    stream() << text;
    stream().flush();
    if (!stream()) {
      throw InputError("write failed");
    }
  }

 private:
  std::ofstream file_;
};

Graph load_topology(const Globals& g) {
  if (g.topo.empty()) {
    throw InputError("--topo is required");
  }
  if (g.topo == "-") {
    return load_graph(std::cin);
  }
  return load_graph_file(g.topo);
}

NodeId pick_root(const Graph& g, const std::optional<std::string>& label) {
  if (g.node_count() == 0) {
    throw InputError("empty topology");
  }
  return label ? g.at(*label) : NodeId(0);
}

std::string cost_text(Cost c) {
  return is_finite(c) ? fmt::format("{}", c) : "inf";
}

// ---- compute

struct ComputeArgs {
  std::string algo = "mdt";
  std::optional<std::string> root;
  bool validated = false;
};

int run_compute(const Globals& globals, const ComputeArgs& args) {
  const auto algo = parse_algo(args.algo);
  if (!algo) {
    throw InputError(fmt::format("unknown algorithm '{}'", args.algo));
  }
  const auto g = load_topology(globals);
  const auto s = pick_root(g, args.root);

  // Everything is brought into the (next hop, cost) form of CandidateSet.
  CandidateSet cands(g.node_count());
  SptResult spt;
  Scheme scheme = Scheme::kEcmp;
  switch (*algo) {
    case Algo::kEc: {
      auto r = ecmp_candidates(g, s);
      for (const auto d : g.nodes()) {
        for (const auto v : r.candidates.at(d)) {
          cands.at(d).push_back({v, r.spt.cost_to(d)});
        }
      }
      spt = std::move(r.spt);
      break;
    }
    case Algo::kDt:
    case Algo::kMdt: {
      auto r = *algo == Algo::kDt ? dt(g, s) : mdt::mdt(g, s);
      cands = std::move(r.candidates);
      spt = std::move(r.spt);
      scheme = *algo == Algo::kDt ? Scheme::kDtRule2 : Scheme::kMdtRule2;
      break;
    }
    case Algo::kKd: {
      auto r = kd(g, s);
      cands = std::move(r.candidates);
      spt = std::move(r.costs.root_tree);
      scheme = Scheme::kKdRule1;
      break;
    }
  }
  std::optional<ValidatedSet> keep;
  if (args.validated) {
    keep = validated_next_hops(g, s, scheme);
  }

  std::string text = "dest,nexthop,cost,is_primary\n";
  for (const auto d : g.nodes()) {
    if (d == s) {
      continue;
    }
    for (const auto& c : cands.at(d)) {
      if (keep) {
        const auto hops = keep->next_hops(d);
        if (!std::binary_search(hops.begin(), hops.end(), c.next_hop)) {
          continue;
        }
      }
      const bool primary = spt.first_hop_of(d) == c.next_hop;
      text += fmt::format("{},{},{},{}\n", g.label(d), g.label(c.next_hop),
                          cost_text(c.cost), primary ? 1 : 0);
    }
  }
  Sink(globals.out).write(text);
  return kOk;
}

// ---- partition

int run_partition(const Globals& globals, const std::optional<std::string>& root) {
  const auto g = load_topology(globals);
  const auto s = pick_root(g, root);
  const auto spt = dijkstra(g, s);
  const auto part = classify_edges(g, spt);
  auto branch = [&](NodeId x) {
    const auto h = part.branch_of(x);
    return h ? g.label(*h) : std::string();
  };
  std::string text = "x,y,w,class,branch_of_x,branch_of_y\n";
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    text += fmt::format("{},{},{},{},{},{}\n", g.label(e.from), g.label(e.to),
                        cost_text(e.weight), to_string(part.edge_class[i]),
                        branch(e.from), branch(e.to));
  }
  Sink(globals.out).write(text);
  return kOk;
}

// ---- gen

int run_gen(const Globals& globals, TopologyGenSpec spec) {
  spec.seed = globals.seed;
  const auto g = generate_topology(spec);
  Sink(globals.out).write(fmt::format(
      "# two-tier topology: {} nodes, cluster {}, mean degree {}, seed {}\n{}",
      spec.nodes, spec.cluster_size, spec.mean_degree, spec.seed, serialize(g)));
  return kOk;
}

// ---- eval

struct EvalArgs {
  std::vector<std::string> algos;
  std::string name;
  unsigned threads = 0;
  bool suite = false;
};

int run_eval(const Globals& globals, const EvalArgs& args) {
  std::vector<Algo> algos;
  for (const auto& a : args.algos) {
    const auto parsed = parse_algo(a);
    if (!parsed) {
      throw InputError(fmt::format("unknown algorithm '{}'", a));
    }
    algos.push_back(*parsed);
  }
  if (algos.empty()) {
    algos.assign(kAllAlgos.begin(), kAllAlgos.end());
  }

  std::vector<std::pair<std::string, Graph>> networks;
  if (args.suite) {
    for (const auto& spec : evaluation_suite()) {
      networks.emplace_back(fmt::format("gen{}", spec.nodes), generate_topology(spec));
    }
  } else {
    auto name = args.name;
    if (name.empty()) {
      name = globals.topo == "-" ? "stdin"
                                 : std::filesystem::path(globals.topo).stem().string();
    }
    networks.emplace_back(name, load_topology(globals));
  }

  Sink sink(globals.out);
  std::uint64_t violations = 0;
  bool header = true;
  for (const auto& [name, g] : networks) {
    const auto report = evaluate(g, name, algos, {args.threads});
    emit_csv(report, sink.stream(), header);
    header = false;
    if (report.violations.total() != 0) {
      fmt::print(stderr, "{}: {} inclusion-chain violations\n", name,
                 report.violations.total());
    }
    violations += report.violations.total();
  }
  return violations == 0 ? kOk : kCheckFailed;
}

// ---- oracle

struct Check {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::string first;

  void expect(bool ok, const std::function<std::string()>& what) {
    ++checked;
    if (!ok && failed++ == 0) {
      first = what();
    }
  }
};

int run_oracle(const Globals& globals, std::size_t max_nodes) {
  const auto g = load_topology(globals);
  if (g.node_count() > max_nodes) {
    throw InputError(fmt::format("{} nodes exceeds --max-nodes {}", g.node_count(),
                                 max_nodes));
  }
  Check methods{"first-hop methods agree"};
  Check kd_exact{"kD equals oracle"};
  Check dt_classes{"DT equals class minima"};
  Check bounds{"DT/mDT lower bound and primary cost"};
  Check dominate{"class minima dominate oracle"};
  Check alternates{"alternate implies two DT/mDT candidates"};
  Check loops{"validated next hops loop-free"};

  auto lbl = [&](NodeId x) { return g.label(x); };
  for (const auto s : g.nodes()) {
    const auto dfs = oracle_first_hop_costs(g, s, max_nodes);
    const auto removal = oracle_first_hop_costs_by_removal(g, s);
    const auto k = kd(g, s);
    const auto d_run = dt(g, s);
    const auto m_run = mdt::mdt(g, s);
    const auto classes =
        oracle_transverse_costs(g, d_run.spt, classify_edges(g, d_run.spt), max_nodes);

    for (std::size_t slot = 0; slot < dfs.neighbors.size(); ++slot) {
      const auto v = dfs.neighbors[slot];
      const auto row = *d_run.costs.slot(v);
      for (const auto d : g.nodes()) {
        if (d == s) {
          continue;
        }
        const auto exact = dfs.via_cost(slot, d);
        auto where = [&] {
          return fmt::format("root {} via {} to {}", lbl(s), lbl(v), lbl(d));
        };
        methods.expect(exact == removal.via_cost(slot, d), where);
        kd_exact.expect(k.costs.via_cost(slot, d) == exact, where);
        dt_classes.expect(d_run.costs.get(row, d) == classes.class_min(slot, d), where);
        dominate.expect(classes.class_min(slot, d) >= exact, where);
        for (const auto* run : {&d_run, &m_run}) {
          const auto mc = run->costs.get(*run->costs.slot(v), d);
          bounds.expect(!is_finite(mc) || mc >= exact, where);
        }
      }
    }
    for (const auto d : g.nodes()) {
      if (d == s || !d_run.spt.reachable(d)) {
        continue;
      }
      auto where = [&] { return fmt::format("root {} to {}", lbl(s), lbl(d)); };
      const auto nh = *d_run.spt.first_hop_of(d);
      for (const auto* run : {&d_run, &m_run}) {
        bounds.expect(run->costs.at(nh, d) == run->spt.cost_to(d), where);
      }
      if (dfs.alternate_exists(d)) {
        alternates.expect(d_run.candidates.at(d).size() >= 2 &&
                              m_run.candidates.at(d).size() >= 2,
                          where);
      }
    }
  }
  for (const auto scheme : {Scheme::kEcmp, Scheme::kDtRule2, Scheme::kMdtRule2,
                            Scheme::kKdRule1}) {
    const auto report = loopfreedom_audit(g, scheme);
    for (const auto& v : report.destinations) {
      loops.expect(v.ok(), [&] {
        return fmt::format("{} toward {}", to_string(scheme), lbl(v.destination));
      });
    }
  }

  std::string text;
  bool all_ok = true;
  for (const auto* c : {&methods, &kd_exact, &dt_classes, &bounds, &dominate,
                        &alternates, &loops}) {
    all_ok = all_ok && c->failed == 0;
    text += fmt::format("{} {} ({} checked", c->failed == 0 ? "PASS" : "FAIL",
                        c->name, c->checked);
    text += c->failed == 0 ? ")\n"
                           : fmt::format(", {} failed, first: {})\n", c->failed, c->first);
  }
  Sink(globals.out).write(text);
  return all_ok ? kOk : kCheckFailed;
}

// ---- loopcheck

int run_loopcheck(const Globals& globals, const std::string& algo) {
  auto scheme = parse_scheme(algo);
  if (!scheme) {
    // also accept the evaluation names (ec, mDT, ...)
    if (const auto a = parse_algo(algo)) {
      constexpr Scheme by_algo[] = {Scheme::kEcmp, Scheme::kDtRule2,
                                    Scheme::kMdtRule2, Scheme::kKdRule1};
      scheme = by_algo[static_cast<int>(*a)];
    }
  }
  const bool loose = algo == "loose";
  if (!scheme && !loose) {
    throw InputError(fmt::format("unknown algorithm '{}'", algo));
  }
  const auto g = load_topology(globals);
  const auto report =
      loose ? loopfreedom_audit(g,
                                [](const Graph& graph, NodeId s) {
                                  const auto r = mdt::mdt(graph, s);
                                  return validate_loose(r.costs, r.spt);
                                })
            : loopfreedom_audit(g, *scheme);
  const std::string scheme_name = loose ? "loose" : std::string(to_string(*scheme));
  const auto* bad = report.first_failure();
  if (bad == nullptr) {
    Sink(globals.out).write(fmt::format("ok: {} destinations loop-free under {}\n",
                                        report.destinations.size(), scheme_name));
    return kOk;
  }
  std::string text;
  if (!bad->acyclic) {
    std::vector<std::string> names;
    for (const auto x : bad->cycle) {
      names.push_back(g.label(x));
    }
    text = fmt::format("cycle toward {}: {}\n", g.label(bad->destination),
                       fmt::join(names, " -> "));
  } else {
    std::vector<std::string> names;
    for (const auto x : bad->stranded) {
      names.push_back(g.label(x));
    }
    text = fmt::format("stranded toward {}: {}\n", g.label(bad->destination),
                       fmt::join(names, " "));
  }
  Sink(globals.out).write(text);
  return kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multipath next-hop computation (ECMP, DT, mDT, kD) and evaluation"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals globals;
  app.add_option("--topo", globals.topo, "Edge-list file (`u v w [w_rev]` per line), - for stdin");
  app.add_option("--seed", globals.seed, "Generator seed");
  app.add_option("--out", globals.out, "Output file (default stdout)");

  auto* gen = app.add_subcommand("gen", "Generate a two-tier access/backbone topology");
  TopologyGenSpec spec;
  gen->add_option("--nodes", spec.nodes, "Router count")->capture_default_str();
  gen->add_option("--cluster", spec.cluster_size, "Routers per access cluster")
      ->capture_default_str();
  gen->add_option("--degree", spec.mean_degree, "Target mean degree")->capture_default_str();
  gen->add_option("--access-weight", spec.access_weight)->capture_default_str();
  gen->add_option("--backbone-weight", spec.backbone_weight)->capture_default_str();

  auto* compute = app.add_subcommand("compute", "Candidate next hops of one root as CSV");
  ComputeArgs compute_args;
  compute->add_option("--algo", compute_args.algo, "ecmp, dt, mdt or kd")
      ->capture_default_str();
  compute->add_option("--root", compute_args.root, "Root label (default: first node)");
  compute->add_flag("--validated", compute_args.validated,
                    "Only next hops accepted by the algorithm's validation rule");

  auto* partition = app.add_subcommand("partition", "Edge classes relative to a root's tree");
  std::optional<std::string> partition_root;
  partition->add_option("--root", partition_root, "Root label (default: first node)");

  auto* eval = app.add_subcommand("eval", "Candidate, validated and operation metrics as CSV");
  EvalArgs eval_args;
  eval->add_option("--algos", eval_args.algos, "Subset of ec, dt, mdt, kd (default all)");
  eval->add_option("--name", eval_args.name, "Network name column (default: file stem)");
  eval->add_option("--threads", eval_args.threads, "Worker threads (0: hardware)");
  eval->add_flag("--suite", eval_args.suite,
                 "Run the ten generated evaluation topologies instead of --topo");

  auto* oracle = app.add_subcommand("oracle", "Check every algorithm against brute force");
  std::size_t max_nodes = kDefaultOracleMaxNodes;
  oracle->add_option("--max-nodes", max_nodes, "Enumeration size guard")
      ->capture_default_str();

  auto* loopcheck = app.add_subcommand("loopcheck", "Audit forwarding graphs for loops");
  std::string loop_algo = "mdt";
  loopcheck->add_option("--algo", loop_algo,
                        "ecmp, dt, mdt, kd, or loose (a deliberately unsafe rule)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*gen) return run_gen(globals, spec);
    if (*compute) return run_compute(globals, compute_args);
    if (*partition) return run_partition(globals, partition_root);
    if (*eval) return run_eval(globals, eval_args);
    if (*oracle) return run_oracle(globals, max_nodes);
    if (*loopcheck) return run_loopcheck(globals, loop_algo);
  } catch (const ParseError& e) {
    fmt::print(stderr, "error: {}: {}\n", globals.topo, e.what());
    return kInputError;
  } catch (const GraphError& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kInputError;
  } catch (const InputError& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kInputError;
  } catch (const std::ios_base::failure& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kInputError;
  }
  return kInputError;
}
