#include "wsmt/report_json.hpp"

#include <json.hpp>

namespace wsmt {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* ordering_name(Ordering o) {
  return o == Ordering::InputOrder ? "input" : "acutest";
}

const char* merge_policy_name(MergePolicy p) {
  return p == MergePolicy::TerminalKeepsWeight ? "keep" : "adopt";
}

const char* tension_name(RelaxTension t) {
  return t == RelaxTension::Uniform ? "uniform" : "weighted";
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string solve_report_json(const SolveReport& report, const SolveConfig& cfg,
                              int terminal_count) {
  ordered_json j;
  j["n_terminals"] = terminal_count;
  j["wmst_weighted_length"] = report.wmst_metrics.weighted_length;
  j["wmst_euclidean_length"] = report.wmst_metrics.euclidean_length;
  j["plane_wmst_weighted_length"] = report.plane_wmst_metrics.weighted_length;
  j["plane_wmst_euclidean_length"] = report.plane_wmst_metrics.euclidean_length;
  j["final_weighted_length"] = report.final_metrics.weighted_length;
  j["final_euclidean_length"] = report.final_metrics.euclidean_length;
  j["ratio_weighted"] = report.ratio_weighted;
  j["ratio_euclidean"] = report.ratio_euclidean;
  j["iterations"] = report.iterations;
  j["converged"] = report.converged;
  j["steiner_count"] = report.steiner_count;
  j["min_steiner_angle_deg"] = report.min_steiner_angle_deg;
  for (const auto& [kind, count] : report.event_counts) {
    j[std::string("count_") + event_kind_name(kind)] = count;
  }
  j["weight_jump_events"] = report.weight_jump_events;
  j["planarity_violations"] = static_cast<int>(report.planarity.crossing_pairs.size());
  j["config_angle_tolerance_fraction"] = cfg.angle_tolerance_fraction;
  j["config_relax_step_cap"] = cfg.relax_step_cap;
  j["config_collision_epsilon"] = cfg.collision_epsilon;
  j["config_tilt_degrees"] = cfg.tilt_degrees;
  j["config_ordering"] = ordering_name(cfg.ordering);
  j["config_merge_policy"] = merge_policy_name(cfg.merge_policy);
  j["config_relax_tension"] = tension_name(cfg.relax_tension);
  return dump(j);
}

std::string tree_metrics_json(const TreeMetrics& metrics, int terminal_count, bool plane,
                              int crossing_pairs) {
  ordered_json j;
  j["n_terminals"] = terminal_count;
  j["plane"] = plane;
  j["weighted_length"] = metrics.weighted_length;
  j["euclidean_length"] = metrics.euclidean_length;
  j["crossing_pairs"] = crossing_pairs;
  return dump(j);
}

std::string oracle_json(const OracleResult& result, int terminal_count) {
  ordered_json j;
  j["n_terminals"] = terminal_count;
  j["best_weighted_length"] = result.best_weighted_length;
  j["best_euclidean_length"] = result.best_euclidean_length;
  j["steiner_count"] = result.best_tree.steiner_count();
  j["topologies_examined"] = result.topologies_examined;
  return dump(j);
}

std::string assumption2_json(const Assumption2Stats& stats, std::uint64_t seed) {
  ordered_json j;
  j["trials"] = stats.trials;
  j["seed"] = seed;
  j["fig7_pattern_trials"] = stats.fig7_pattern_trials;
  j["wmst_crossing_trials"] = stats.wmst_crossing_trials;
  j["max_wmst_crossings"] = stats.max_wmst_crossings;
  j["heuristic_nonplanar_trials"] = stats.heuristic_nonplanar_trials;
  return dump(j);
}

}  // namespace wsmt
