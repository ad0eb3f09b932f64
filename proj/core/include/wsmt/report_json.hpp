#pragma once

#include <string>

#include "wsmt/heuristic.hpp"
#include "wsmt/instance.hpp"
#include "wsmt/oracle.hpp"

namespace wsmt {

/// Flat snake_case JSON of a solve report plus the config echo; the same
/// inputs always serialize byte-identically.
std::string solve_report_json(const SolveReport& report, const SolveConfig& cfg,
                              int terminal_count);

std::string tree_metrics_json(const TreeMetrics& metrics, int terminal_count, bool plane,
                              int crossing_pairs);

std::string oracle_json(const OracleResult& result, int terminal_count);

std::string assumption2_json(const Assumption2Stats& stats, std::uint64_t seed);

}  // namespace wsmt
