#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mdt/graph.hpp"

namespace mdt {

enum class Algo { kEc, kDt, kMdt, kKd };

inline constexpr std::array<Algo, 4> kAllAlgos = {Algo::kEc, Algo::kDt,
                                                  Algo::kMdt, Algo::kKd};

std::string_view to_string(Algo a);
std::optional<Algo> parse_algo(std::string_view name);

struct AlgoTotals {
  Algo algo = Algo::kEc;
  std::uint64_t candidates = 0;  // summed over (router, destination) pairs
  std::uint64_t validated = 0;
  std::uint64_t ops = 0;         // summed over routers
};

// Inclusion checks made while evaluating, counted per (router, destination).
struct ChainViolations {
  std::uint64_t ec_in_mdt = 0;
  std::uint64_t dt_in_mdt = 0;
  std::uint64_t mdt_in_kd = 0;
  std::uint64_t validated_mdt_in_kd = 0;

  std::uint64_t total() const {
    return ec_in_mdt + dt_in_mdt + mdt_in_kd + validated_mdt_in_kd;
  }
};

// Candidates and validated next hops are averaged per ordered (router,
// destination) pair, operations per router. Ratios compare totals to kD.
struct EvalReport {
  std::string network;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t routers = 0;
  std::size_t pairs = 0;
  std::vector<AlgoTotals> rows;  // selected algorithms, in kAllAlgos order
  AlgoTotals kd_reference;       // always computed, ratios divide by it
  std::uint64_t dijkstra_ops = 0;  // one plain Dijkstra per router
  ChainViolations violations;

  const AlgoTotals* find(Algo a) const;
  double mean_candidates(const AlgoTotals& t) const;
  double mean_validated(const AlgoTotals& t) const;
  double mean_ops(const AlgoTotals& t) const;
  double candidate_ratio_pct(const AlgoTotals& t) const;
  double validated_ratio_pct(const AlgoTotals& t) const;
  double ops_ratio_pct(const AlgoTotals& t) const;
  double mean_dijkstra_ops() const;
};

struct EvalOptions {
  unsigned threads = 0;  // 0: hardware concurrency
};

// Runs every selected algorithm from every router. The result does not depend
// on the thread count.
EvalReport evaluate(const Graph& g, std::string network,
                    std::span<const Algo> algos = kAllAlgos,
                    const EvalOptions& options = {});

// Ten two-tier topologies, 20 to 200 nodes in steps of 20, fixed seeds.
std::vector<TopologyGenSpec> evaluation_suite();

struct EvalRow {
  std::string network;
  std::string algo;
  double mean_candidates = 0;
  double cand_ratio_pct = 0;
  double mean_validated = 0;
  double valid_ratio_pct = 0;
  double mean_ops = 0;
  double ops_ratio_pct = 0;
};

inline constexpr std::string_view kCsvHeader =
    "network,algo,mean_candidates,cand_ratio_pct,mean_validated,"
    "valid_ratio_pct,mean_ops,ops_ratio_pct";

std::vector<EvalRow> report_rows(const EvalReport& report);

// Header plus one row per algorithm, values with two decimals. Pass
// `header = false` to append to an existing table. Throws std::ios_base::failure
// when the sink fails.
void emit_csv(const EvalReport& report, std::ostream& out, bool header = true);
std::vector<EvalRow> parse_csv(std::istream& in);

}  // namespace mdt
