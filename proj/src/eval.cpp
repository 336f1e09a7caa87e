#include "mdt/eval.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <sstream>
#include <thread>

#include <fmt/format.h>

#include "mdt/kd.hpp"
#include "mdt/spt.hpp"
#include "mdt/transverse.hpp"
#include "mdt/validation.hpp"

namespace mdt {

std::string_view to_string(Algo a) {
  switch (a) {
    case Algo::kEc:
      return "EC";
    case Algo::kDt:
      return "DT";
    case Algo::kMdt:
      return "mDT";
    case Algo::kKd:
      return "kD";
  }
  return "?";
}

std::optional<Algo> parse_algo(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "ec" || lower == "ecmp") return Algo::kEc;
  if (lower == "dt") return Algo::kDt;
  if (lower == "mdt") return Algo::kMdt;
  if (lower == "kd") return Algo::kKd;
  return std::nullopt;
}

const AlgoTotals* EvalReport::find(Algo a) const {
  if (a == Algo::kKd) {
    return &kd_reference;
  }
  for (const auto& r : rows) {
    if (r.algo == a) {
      return &r;
    }
  }
  return nullptr;
}

namespace {

double ratio(double num, double den) { return den == 0 ? 0 : num / den; }

}  // namespace

double EvalReport::mean_candidates(const AlgoTotals& t) const {
  return ratio(static_cast<double>(t.candidates), static_cast<double>(pairs));
}
double EvalReport::mean_validated(const AlgoTotals& t) const {
  return ratio(static_cast<double>(t.validated), static_cast<double>(pairs));
}
double EvalReport::mean_ops(const AlgoTotals& t) const {
  return ratio(static_cast<double>(t.ops), static_cast<double>(routers));
}
double EvalReport::candidate_ratio_pct(const AlgoTotals& t) const {
  return 100.0 * ratio(static_cast<double>(t.candidates),
                       static_cast<double>(kd_reference.candidates));
}
double EvalReport::validated_ratio_pct(const AlgoTotals& t) const {
  return 100.0 * ratio(static_cast<double>(t.validated),
                       static_cast<double>(kd_reference.validated));
}
double EvalReport::ops_ratio_pct(const AlgoTotals& t) const {
  return 100.0 * ratio(static_cast<double>(t.ops),
                       static_cast<double>(kd_reference.ops));
}
double EvalReport::mean_dijkstra_ops() const {
  return ratio(static_cast<double>(dijkstra_ops), static_cast<double>(routers));
}

namespace {

struct RootEval {
  std::array<AlgoTotals, 4> totals{};
  std::uint64_t dijkstra_ops = 0;
  std::uint64_t pairs = 0;
  ChainViolations violations;
};

bool subset(const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

RootEval evaluate_root(const Graph& g, NodeId s) {
  RootEval out;
  const auto ec = ecmp_candidates(g, s);
  const auto dt_run = dt(g, s);
  const auto mdt_run = mdt(g, s);
  const auto kd_run = kd(g, s);

  const auto ec_valid = validate_ecmp(ec.candidates, ec.spt);
  const auto dt_valid = validate_rule2(dt_run.costs, dt_run.spt);
  const auto mdt_valid = validate_rule2(mdt_run.costs, mdt_run.spt);
  const auto kd_valid = validate_rule1(kd_run.costs);

  for (std::size_t i = 0; i < g.node_count(); ++i) {
    const NodeId d(i);
    if (d == s || !ec.spt.reachable(d)) {
      continue;
    }
    ++out.pairs;
    const auto& ec_hops = ec.candidates.at(d);
    const auto dt_hops = dt_run.candidates.next_hops(d);
    const auto mdt_hops = mdt_run.candidates.next_hops(d);
    const auto kd_hops = kd_run.candidates.next_hops(d);

    out.totals[0].candidates += ec_hops.size();
    out.totals[1].candidates += dt_hops.size();
    out.totals[2].candidates += mdt_hops.size();
    out.totals[3].candidates += kd_hops.size();
    out.totals[0].validated += ec_valid.at(d).size();
    out.totals[1].validated += dt_valid.at(d).size();
    out.totals[2].validated += mdt_valid.at(d).size();
    out.totals[3].validated += kd_valid.at(d).size();

    out.violations.ec_in_mdt += subset(ec_hops, mdt_hops) ? 0 : 1;
    out.violations.dt_in_mdt += subset(dt_hops, mdt_hops) ? 0 : 1;
    out.violations.mdt_in_kd += subset(mdt_hops, kd_hops) ? 0 : 1;
    out.violations.validated_mdt_in_kd +=
        subset(mdt_valid.next_hops(d), kd_valid.next_hops(d)) ? 0 : 1;
  }
  out.totals[0].ops = ec.ops.total();
  out.totals[1].ops = dt_run.ops.total();
  out.totals[2].ops = mdt_run.ops.total();
  out.totals[3].ops = kd_run.ops.total();
  // The ECMP sweep is a plain Dijkstra plus its next-hop set updates.
  out.dijkstra_ops = ec.ops.total() - ec.ops.tp_updates;
  return out;
}

}  // namespace

EvalReport evaluate(const Graph& g, std::string network,
                    std::span<const Algo> algos, const EvalOptions& options) {
  const auto n = g.node_count();
  std::vector<RootEval> per_root(n);

  unsigned threads = options.threads != 0 ? options.threads
                                          : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(std::max<std::size_t>(n, 1)));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (auto i = next++; i < n; i = next++) {
      per_root[i] = evaluate_root(g, NodeId(i));
    }
  };
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back(work);
    }
  }

  EvalReport report;
  report.network = std::move(network);
  report.nodes = n;
  report.edges = g.edge_count();
  report.routers = n;
  std::array<AlgoTotals, 4> sums{};
  for (std::size_t a = 0; a < sums.size(); ++a) {
    sums[a].algo = kAllAlgos[a];
  }
  // Fixed reduction order by root index.
  for (const auto& r : per_root) {
    for (std::size_t a = 0; a < sums.size(); ++a) {
      sums[a].candidates += r.totals[a].candidates;
      sums[a].validated += r.totals[a].validated;
      sums[a].ops += r.totals[a].ops;
    }
    report.pairs += r.pairs;
    report.dijkstra_ops += r.dijkstra_ops;
    report.violations.ec_in_mdt += r.violations.ec_in_mdt;
    report.violations.dt_in_mdt += r.violations.dt_in_mdt;
    report.violations.mdt_in_kd += r.violations.mdt_in_kd;
    report.violations.validated_mdt_in_kd += r.violations.validated_mdt_in_kd;
  }
  report.kd_reference = sums[3];
  for (std::size_t a = 0; a < sums.size(); ++a) {
    if (std::find(algos.begin(), algos.end(), kAllAlgos[a]) != algos.end()) {
      report.rows.push_back(sums[a]);
    }
  }
  return report;
}

std::vector<TopologyGenSpec> evaluation_suite() {
  std::vector<TopologyGenSpec> suite;
  for (std::size_t i = 0; i < 10; ++i) {
    TopologyGenSpec spec;
    spec.nodes = 20 + 20 * i;
    spec.seed = 1000 + i;
    suite.push_back(spec);
  }
  return suite;
}

std::vector<EvalRow> report_rows(const EvalReport& report) {
  std::vector<EvalRow> rows;
  for (const auto& t : report.rows) {
    rows.push_back({report.network, std::string(to_string(t.algo)),
                    report.mean_candidates(t), report.candidate_ratio_pct(t),
                    report.mean_validated(t), report.validated_ratio_pct(t),
                    report.mean_ops(t), report.ops_ratio_pct(t)});
  }
  return rows;
}

void emit_csv(const EvalReport& report, std::ostream& out, bool header) {
  std::string text;
  if (header) {
    text += kCsvHeader;
    text += '\n';
  }
  for (const auto& r : report_rows(report)) {
    text += fmt::format("{},{},{:.2f},{:.2f},{:.2f},{:.2f},{:.2f},{:.2f}\n",
                        r.network, r.algo, r.mean_candidates, r.cand_ratio_pct,
                        r.mean_validated, r.valid_ratio_pct, r.mean_ops,
                        r.ops_ratio_pct);
  }
  out << text;
  out.flush();
  if (!out) {
    throw std::ios_base::failure("cannot write evaluation CSV");
  }
}

std::vector<EvalRow> parse_csv(std::istream& in) {
  std::vector<EvalRow> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == kCsvHeader) {
      continue;
    }
    std::vector<std::string> fields;
    std::stringstream ss(line);
    for (std::string f; std::getline(ss, f, ',');) {
      fields.push_back(f);
    }
    if (fields.size() != 8) {
      throw ParseError(line_no, "expected 8 comma-separated fields");
    }
    auto number = [&](const std::string& f) {
      double v = 0;
      const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
      if (ec != std::errc{} || ptr != f.data() + f.size()) {
        throw ParseError(line_no, fmt::format("bad number '{}'", f));
      }
      return v;
    };
    rows.push_back({fields[0], fields[1], number(fields[2]), number(fields[3]),
                    number(fields[4]), number(fields[5]), number(fields[6]),
                    number(fields[7])});
  }
  return rows;
}

}  // namespace mdt
