#include <doctest.h>

#include <string>

#include "support.hpp"
#include "wsmt/heuristic.hpp"
#include "wsmt/instance.hpp"
#include "wsmt/report_json.hpp"
#include "wsmt/svg.hpp"
#include "wsmt/wmst.hpp"

using namespace wsmt;

namespace {

int count_substr(const std::string& text, const std::string& needle) {
  int n = 0;
  size_t pos = 0;
  while ((pos = text.find(needle, pos)) != std::string::npos) {
    ++n;
    pos += needle.size();
  }
  return n;
}

}  // namespace

TEST_CASE("parse_instance reads the rectangle orientation") {
  const Instance inst = parse_instance("0 0 7\n2 0 1\n2 2 1\n0 2 7\n");
  REQUIRE(inst.terminals.size() == 4);
  CHECK(inst.terminals[0].pos.x == 0.0);
  CHECK(inst.terminals[0].weight == 7.0);
  CHECK(inst.terminals[3].pos.y == 2.0);
  CHECK(inst.insertion_order == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("parse_instance skips comments and blank lines") {
  const Instance inst = parse_instance("# comment\n\n50 50 1\n");
  REQUIRE(inst.terminals.size() == 1);
  CHECK(inst.terminals[0].pos.x == 50.0);
}

TEST_CASE("parse_instance error cases carry line numbers") {
  CHECK_THROWS_AS(parse_instance("10 10 0\n"), WeightError);
  try {
    parse_instance("10 10 0\n");
  } catch (const WeightError& e) {
    CHECK(e.line() == 1);
  }

  CHECK_THROWS_AS(parse_instance("1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("1 2 3 4\n"), ParseError);
  CHECK_THROWS_AS(parse_instance(""), ParseError);

  try {
    parse_instance("0 0 1\n# fine\n0 0 2\n");
    FAIL("expected DuplicateTerminalError");
  } catch (const DuplicateTerminalError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("parse-serialize-parse round-trips") {
  const Instance inst = generate_random_instance(20, 1, 9, 42);
  const std::string text = write_instance(inst.terminals);
  const Instance again = parse_instance(text);
  REQUIRE(again.terminals.size() == inst.terminals.size());
  for (size_t i = 0; i < inst.terminals.size(); ++i) {
    CHECK(again.terminals[i].pos.x == inst.terminals[i].pos.x);
    CHECK(again.terminals[i].pos.y == inst.terminals[i].pos.y);
    CHECK(again.terminals[i].weight == inst.terminals[i].weight);
  }
  CHECK(again.insertion_order == inst.insertion_order);
  CHECK(write_instance(again.terminals) == text);
}

TEST_CASE("generate_random_instance is reproducible and in range") {
  const Instance a = generate_random_instance(30, 1, 9, 42);
  const Instance b = generate_random_instance(30, 1, 9, 42);
  CHECK(write_instance(a.terminals) == write_instance(b.terminals));
  for (const auto& t : a.terminals) {
    CHECK(t.pos.x >= 0.0);
    CHECK(t.pos.x <= 100.0);
    CHECK(t.pos.y >= 0.0);
    CHECK(t.pos.y <= 100.0);
    CHECK(t.weight >= 1.0);
    CHECK(t.weight <= 9.0);
    CHECK(t.weight == static_cast<int>(t.weight));
  }
  const Instance c = generate_random_instance(30, 1, 9, 43);
  CHECK(write_instance(a.terminals) != write_instance(c.terminals));
}

TEST_CASE("single-terminal SVG contains exactly one disk") {
  PlaneTree tree;
  tree.add_vertex({50, 50}, 1.0, VertexKind::Terminal);
  const std::string svg = render_svg(tree);
  CHECK(count_substr(svg, "<circle") == 1);
  CHECK(count_substr(svg, "<line") == 0);
}

TEST_CASE("rendering is byte-identical across runs") {
  const Instance inst = generate_random_instance(12, 1, 9, 7);
  const SolveResult r1 = solve(inst.terminals);
  const SolveResult r2 = solve(inst.terminals);
  const PlaneTree plane = plane_weighted_mst(inst.terminals);
  RenderSpec spec;
  spec.phases = {RenderPhase::Overlay};
  CHECK(render_svg(plane, r1, spec) == render_svg(plane, r2, spec));
  CHECK(render_svg(r1.tree) == render_svg(r2.tree));
}

TEST_CASE("final rectangle SVG shows 6 vertices and 5 edges") {
  const Instance inst = parse_instance("0 0 7\n2 0 1\n2 2 1\n0 2 7\n");
  const SolveResult r = solve(inst.terminals);
  REQUIRE(r.tree.steiner_count() == 2);
  const std::string svg = render_svg(r.tree);
  CHECK(count_substr(svg, "<circle") == 6);
  CHECK(count_substr(svg, "<line") == 5);
}

TEST_CASE("solve report JSON satisfies the ratio identities") {
  const Instance inst = generate_random_instance(9, 1, 9, 99);
  const SolveConfig cfg;
  const SolveResult r = solve(inst.terminals, cfg);
  CHECK(std::abs(r.report.ratio_weighted * r.report.plane_wmst_metrics.weighted_length -
                 r.report.final_metrics.weighted_length) <= 1e-12 * (1.0 + r.report.final_metrics.weighted_length));
  CHECK(std::abs(r.report.ratio_euclidean * r.report.plane_wmst_metrics.euclidean_length -
                 r.report.final_metrics.euclidean_length) <= 1e-12 * (1.0 + r.report.final_metrics.euclidean_length));
  const std::string j1 = solve_report_json(r.report, cfg, 9);
  const std::string j2 = solve_report_json(solve(inst.terminals, cfg).report, cfg, 9);
  CHECK(j1 == j2);
  CHECK(j1.find("\"ratio_weighted\"") != std::string::npos);
  CHECK(j1.find("\"config_merge_policy\": \"keep\"") != std::string::npos);
}

TEST_CASE("assumption2 experiment smoke run") {
  const Assumption2Stats stats = assumption2_experiment(12, 2026);
  CHECK(stats.trials == 12);
  CHECK(stats.fig7_pattern_trials == 0);
  CHECK(stats.heuristic_nonplanar_trials == 0);

  const Assumption2Stats again = assumption2_experiment(12, 2026);
  CHECK(again.fig7_pattern_trials == stats.fig7_pattern_trials);
  CHECK(again.wmst_crossing_trials == stats.wmst_crossing_trials);
  CHECK(again.max_wmst_crossings == stats.max_wmst_crossings);
}

TEST_CASE("assumption2 template matches its description") {
  const auto pts = assumption2_template();
  REQUIRE(pts.size() == 7);
  // Two equilateral triangles: side lengths within each triple agree.
  auto side = [&](int i, int j) { return euclid_dist(pts[i], pts[j]); };
  CHECK(side(0, 1) == doctest::Approx(side(0, 2)).epsilon(1e-12));
  CHECK(side(0, 1) == doctest::Approx(side(1, 2)).epsilon(1e-12));
  CHECK(side(3, 4) == doctest::Approx(side(3, 5)).epsilon(1e-12));
  CHECK(side(3, 4) == doctest::Approx(side(4, 5)).epsilon(1e-12));
  // Mirrored and resized, slightly apart.
  CHECK(side(0, 1) > side(3, 4));
  CHECK(pts[5].x - pts[2].x > 0.0);
  CHECK(pts[5].x - pts[2].x < 5.0);
}

TEST_CASE("atomic write then read round-trips") {
  const std::string path = "/tmp/wsmt_test_atomic.txt";
  write_file_atomic(path, "0 0 1\n1 1 2\n");
  CHECK(read_file(path) == "0 0 1\n1 1 2\n");
}
