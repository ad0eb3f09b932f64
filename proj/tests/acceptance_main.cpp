// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Tolerances are pinned in code next to each check.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "support.hpp"
#include "wsmt/heuristic.hpp"
#include "wsmt/instance.hpp"
#include "wsmt/oracle.hpp"
#include "wsmt/wmst.hpp"

using namespace wsmt;
using testsupport::hexagon_orbit;
using testsupport::rectangle_instance;

namespace {

int failures = 0;

class Criterion {
 public:
  Criterion(int number, std::string title)
      : number_(number), title_(std::move(title)), start_(std::chrono::steady_clock::now()) {}

  void expect(bool ok, const std::string& detail) {
    if (!ok) {
      ok_ = false;
      details_ += (details_.empty() ? "" : "; ") + detail;
    }
  }

  void note(const std::string& text) { notes_ += (notes_.empty() ? "" : "; ") + text; }

  double elapsed_s() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  void finish(double runtime_budget_s) {
    const double sec = elapsed_s();
    if (runtime_budget_s > 0.0 && sec >= runtime_budget_s) {
      ok_ = false;
      details_ += (details_.empty() ? "" : "; ") + std::string("runtime budget exceeded");
    }
    std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n", ok_ ? "PASS" : "FAIL", number_,
                title_.c_str(), sec, notes_.empty() ? "" : ("; " + notes_).c_str(),
                details_.empty() ? "" : ("; FAILED: " + details_).c_str());
    if (!ok_) ++failures;
  }

 private:
  int number_;
  std::string title_;
  bool ok_ = true;
  std::string details_;
  std::string notes_;
  std::chrono::steady_clock::time_point start_;
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

void criterion1_hexagon_orbit() {
  Criterion c(1, "hexagon-orbit MST and Steiner lengths");
  const double sqrt3 = std::numbers::sqrt3;
  for (double s : {1.0 / 8.0, 0.2, 2.0 - sqrt3, 1.0 / 3.0}) {
    const auto terminals = hexagon_orbit(s);
    const double mst = tree_metrics(weighted_mst(terminals)).euclidean_length;
    c.expect(std::abs(mst - (4.0 - 2.0 * s)) <= 1e-9,
             "MST length " + fmt(mst) + " != " + fmt(4.0 - 2.0 * s) + " at s=" + fmt(s));
  }
  for (double s : {1.0 / 8.0, 0.2}) {
    const OracleResult r = oracle_wsmt(hexagon_orbit(s));
    c.expect(std::abs(r.best_euclidean_length - 2.0 * sqrt3) <= 1e-9,
             "oracle " + fmt(r.best_euclidean_length) + " != 2*sqrt(3) at s=" + fmt(s));
  }
  {
    const double s = 2.0 - sqrt3;
    const OracleResult r = oracle_wsmt(hexagon_orbit(s));
    c.expect(std::abs(r.best_euclidean_length - (4.0 - 2.0 * s)) <= 1e-9 &&
                 std::abs(r.best_euclidean_length - 2.0 * sqrt3) <= 1e-9,
             "path and star should tie at s=2-sqrt(3), oracle gave " +
                 fmt(r.best_euclidean_length));
  }
  c.finish(1.0);
}

void criterion2_rectangle_threshold() {
  Criterion c(2, "rectangle WMST threshold at ell=8/7");
  {
    const PlaneTree t = weighted_mst(rectangle_instance(1.2, 7.0));
    c.expect(!t.has_edge(0, 3), "AD kept at ell=1.2");
    c.expect(std::abs(tree_metrics(t).weighted_length - (16.0 + 1.2)) <= 1e-9,
             "cost at ell=1.2");
  }
  {
    const PlaneTree t = weighted_mst(rectangle_instance(1.1, 7.0));
    c.expect(t.has_edge(0, 3), "AD dropped at ell=1.1");
    c.expect(std::abs(tree_metrics(t).weighted_length - (8.0 + 8.8)) <= 1e-9,
             "cost at ell=1.1");
  }
  {
    const double ell = 8.0 / 7.0;
    const double got = tree_metrics(weighted_mst(rectangle_instance(ell, 7.0))).weighted_length;
    c.expect(std::abs(got - (16.0 + ell)) <= 1e-9 && std::abs(got - (8.0 + 8.0 * ell)) <= 1e-9,
             "no tie at ell=8/7: got " + fmt(got));
  }
  c.finish(1.0);
}

void criterion3_assumption1_bound() {
  Criterion c(3, "Assumption-1 ratio sqrt(3)-1 attained on the relaxed ell=2 configuration");
  const double bound = std::numbers::sqrt3 - 1.0;

  // The heuristic's relaxed output on the omega=7 rectangle.
  const SolveResult r = solve(rectangle_instance(2.0, 7.0));
  c.expect(r.report.converged, "solve did not converge");
  c.expect(r.tree.steiner_count() == 2,
           "expected 2 Steiner points, got " + fmt(r.tree.steiner_count()));
  Edge ss{-1, -1};
  for (const Edge& e : r.tree.edges()) {
    if (r.tree.vertex(e.first).kind == VertexKind::Steiner &&
        r.tree.vertex(e.second).kind == VertexKind::Steiner) {
      ss = e;
    }
  }
  c.expect(ss.first >= 0, "no Steiner-Steiner edge in the relaxed configuration");
  if (ss.first >= 0) {
    const double len = euclid_dist(r.tree.vertex(ss.first).pos, r.tree.vertex(ss.second).pos);
    double min_ratio = 1e30, max_ratio = 0.0;
    for (int side : {ss.first, ss.second}) {
      for (int p : r.tree.neighbors(side)) {
        if (p == ss.first || p == ss.second) continue;
        const double ratio =
            len / euclid_dist(r.tree.vertex(p).pos, r.tree.vertex(side).pos);
        min_ratio = std::min(min_ratio, ratio);
        max_ratio = std::max(max_ratio, ratio);
      }
    }
    c.expect(std::abs(min_ratio - bound) <= 1e-3 && std::abs(max_ratio - bound) <= 1e-3,
             "ratios [" + fmt(min_ratio) + ", " + fmt(max_ratio) + "] != sqrt(3)-1");
    // Frozen equilibrium positions: junctions at distance 1/sqrt(3) from the
    // nearer length-2 side, on the mid-axis.
    for (int side : {ss.first, ss.second}) {
      const Point p = r.tree.vertex(side).pos;
      const double d = std::min(std::abs(p.y), std::abs(2.0 - p.y));
      c.expect(std::abs(p.x - 1.0) <= 1e-3 &&
                   std::abs(d - 1.0 / std::numbers::sqrt3) <= 1e-3,
               "junction off the frozen equilibrium position");
    }
  }

  // Frozen weighted regressions for the same instance: the brute-force
  // optimum wraps the heavy corners (exactly 6), while the topology with
  // both junctions on the heavy side equilibrates at 2 + sqrt(3) + 3 sqrt(7).
  const OracleResult oracle = oracle_wsmt(rectangle_instance(2.0, 7.0));
  c.expect(std::abs(oracle.best_weighted_length - 6.0) <= 1e-9,
           "wrapped optimum " + fmt(oracle.best_weighted_length) + " != 6");
  const Topology heavy_side{4, 2, {{0, 4}, {3, 4}, {4, 5}, {1, 5}, {2, 5}}};
  const OptimizedTopology interior =
      optimize_topology(heavy_side, rectangle_instance(2.0, 7.0));
  const double frozen = 2.0 + std::numbers::sqrt3 + 3.0 * std::sqrt(7.0);
  c.expect(std::abs(interior.weighted_length - frozen) <= 1e-6,
           "interior equilibrium " + fmt(interior.weighted_length) + " != " + fmt(frozen));
  c.note("relaxed ratio attains " + fmt(bound));
  c.finish(5.0);
}

PlaneTree vertical_start(double ell) {
  PlaneTree tree;
  for (const auto& t : rectangle_instance(ell, 1.0)) {
    tree.add_vertex_with_id(t.id, t.pos, t.weight, VertexKind::Terminal);
  }
  const int s1 = tree.add_vertex({1.0, 0.75 * ell}, 1.0, VertexKind::Steiner);
  const int s2 = tree.add_vertex({1.0, 0.25 * ell}, 1.0, VertexKind::Steiner);
  tree.add_edge(0, s1);
  tree.add_edge(1, s1);
  tree.add_edge(s1, s2);
  tree.add_edge(2, s2);
  tree.add_edge(3, s2);
  return tree;
}

void criterion4_topology_swap() {
  Criterion c(4, "collision-driven swap reaches the long-side topology");
  for (double ell : {0.8, 1.0, 1.1}) {
    const SolveResult r = solve_tree(vertical_start(ell));
    const OracleResult oracle = oracle_wsmt(rectangle_instance(ell, 1.0));
    c.expect(std::abs(r.report.final_metrics.euclidean_length -
                      oracle.best_euclidean_length) <= 1e-6,
             "length mismatch at ell=" + fmt(ell) + ": heuristic " +
                 fmt(r.report.final_metrics.euclidean_length) + " vs oracle " +
                 fmt(oracle.best_euclidean_length));
    bool horizontal = false;
    for (const Edge& e : r.tree.edges()) {
      if (r.tree.vertex(e.first).kind != VertexKind::Steiner ||
          r.tree.vertex(e.second).kind != VertexKind::Steiner) {
        continue;
      }
      const Point a = r.tree.vertex(e.first).pos;
      const Point b = r.tree.vertex(e.second).pos;
      horizontal = std::abs(a.y - b.y) < 0.1 * std::abs(a.x - b.x);
    }
    c.expect(horizontal, "Steiner edge not parallel to the length-2 sides at ell=" + fmt(ell));
  }
  c.finish(5.0);
}

struct SweepData {
  std::vector<SolveResult> results;
  std::vector<double> oracle_lengths;
  std::vector<double> plane_lengths;
};

SweepData run_sweep() {
  SweepData data;
  for (int seed = 1; seed <= 100; ++seed) {
    const int n = 4 + (seed % 4);
    const Instance inst = generate_random_instance(n, 1, 9, seed);
    data.results.push_back(solve(inst.terminals));
    data.oracle_lengths.push_back(oracle_wsmt(inst.terminals).best_weighted_length);
    data.plane_lengths.push_back(
        tree_metrics(plane_weighted_mst(inst.terminals)).weighted_length);
  }
  return data;
}

void criterion5_sandwich(const SweepData& data) {
  Criterion c(5, "sandwich: oracle <= heuristic <= plane WMST over 100 instances");
  int lower_violations = 0, upper_violations = 0, exempt = 0;
  double gap_sum = 0.0;
  for (size_t i = 0; i < data.results.size(); ++i) {
    const double heur = data.results[i].report.final_metrics.weighted_length;
    const double oracle = data.oracle_lengths[i];
    const double plane = data.plane_lengths[i];
    if (oracle > heur + 1e-7 * (1.0 + heur)) ++lower_violations;
    if (data.results[i].report.weight_jump_events > 0) {
      ++exempt;
    } else if (heur > plane + 1e-7 * (1.0 + plane)) {
      ++upper_violations;
    }
    gap_sum += heur / oracle - 1.0;
  }
  c.expect(lower_violations == 0,
           fmt(lower_violations) + " instances with heuristic below the oracle");
  c.expect(upper_violations == 0,
           fmt(upper_violations) + " non-exempt instances above the plane WMST");
  c.note("mean heuristic/oracle gap " + fmt(100.0 * gap_sum / data.results.size()) +
         "%, merge-exempt instances " + fmt(exempt));
  c.finish(600.0);
}

void criterion6_postconditions(const SweepData& data) {
  Criterion c(6, "final Steiner degrees and 120-degree tolerance over the same instances");
  int degree_violations = 0, angle_violations = 0;
  const double threshold = 120.0 * (1.0 - 0.022);
  for (const SolveResult& r : data.results) {
    for (const auto& v : r.tree.vertices()) {
      if (v.kind != VertexKind::Steiner) continue;
      if (r.tree.degree(v.id) != 3) ++degree_violations;
    }
    if (min_steiner_pair_angle(r.tree) < threshold) ++angle_violations;
  }
  c.expect(degree_violations == 0, fmt(degree_violations) + " Steiner degree violations");
  c.expect(angle_violations == 0, fmt(angle_violations) + " instances below " + fmt(threshold));
  c.finish(600.0);
}

void criterion7_planarity() {
  Criterion c(7, "planarity over 1000 random instances and the 7-vertex experiment");
  int violations = 0;
  for (int seed = 1; seed <= 1000; ++seed) {
    const int n = 3 + (seed % 13);
    const Instance inst = generate_random_instance(n, 1, 9, 5000 + seed);
    const SolveResult r = solve(inst.terminals);
    if (!r.report.planarity.crossing_pairs.empty()) {
      ++violations;
      c.note("crossing at seed " + fmt(5000 + seed));
    }
  }
  c.expect(violations == 0, fmt(violations) + " heuristic outputs with crossings");

  const Assumption2Stats stats = assumption2_experiment(1000, 424242);
  c.expect(stats.fig7_pattern_trials == 0,
           fmt(stats.fig7_pattern_trials) + " template WMSTs matched the forbidden pattern");
  c.expect(stats.heuristic_nonplanar_trials == 0,
           fmt(stats.heuristic_nonplanar_trials) + " nonplanar experiment outputs");
  c.note("generic WMST crossings in " + fmt(stats.wmst_crossing_trials) +
         "/1000 template trials (ordinary, cf. the non-embedded WMST)");
  c.finish(600.0);
}

void criterion8_detachment_gain() {
  Criterion c(8, "detachment gain sign matches the 120-degree criterion");
  auto f = [](double t, double alpha_deg) {
    const double a = alpha_deg * std::numbers::pi / 180.0;
    return t + 2.0 * std::sqrt(1.0 + t * t - 2.0 * t * std::cos(a));
  };
  const double t = 1e-4;
  for (double alpha : {40.0, 50.0, 59.0}) {
    c.expect(f(t, alpha) < f(0.0, alpha) - 1e-10, "no strict gain at alpha=" + fmt(alpha));
  }
  for (double alpha : {60.0, 61.0, 75.0}) {
    c.expect(f(t, alpha) >= f(0.0, alpha) - 1e-10, "spurious gain at alpha=" + fmt(alpha));
  }
  c.finish(1.0);
}

}  // namespace

int main() {
  std::printf("weighted Steiner tree acceptance suite\n");
  criterion1_hexagon_orbit();
  criterion2_rectangle_threshold();
  criterion3_assumption1_bound();
  criterion4_topology_swap();
  const SweepData sweep = run_sweep();
  criterion5_sandwich(sweep);
  criterion6_postconditions(sweep);
  criterion7_planarity();
  criterion8_detachment_gain();
  std::printf(
      "note: the published figures' totals (5498.4, 3065.6, 3775.8, 0.56/0.69) and the\n"
      "external-solver timings depend on unpublished inputs; they are documented context,\n"
      "covered here by criteria 1-8 instead.\n");
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
