#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wsmt/tree.hpp"

namespace wsmt {

/// Parsed "x y w" records; ids follow record order, which also defines the
/// insertion order used by the solver.
struct Instance {
  std::vector<WeightedVertex> terminals;
  std::vector<int> insertion_order;
};

/// Parses instance text: one "x y w" per line, '#' comments and blank lines
/// skipped. Errors carry 1-based line numbers.
Instance parse_instance(const std::string& text);

/// Serializes terminals back to the instance format (6 decimal places).
std::string write_instance(const std::vector<WeightedVertex>& terminals);

/// Uniform positions in [0,100]^2 with integer weights in [wmin, wmax],
/// reproducible from the seed.
Instance generate_random_instance(int n, int wmin, int wmax, std::uint64_t seed);

/// The fixed 7-vertex template of the planarity experiment: two mirrored,
/// resized equilateral triangles with near-touching apexes plus one point in
/// the gap.
std::vector<Point> assumption2_template();

struct Assumption2Stats {
  int trials = 0;
  // Trials matching the forbidden pattern: a properly-crossing WMST edge pair
  // with one edge at each apex (the X-handshake between the triangles).
  int fig7_pattern_trials = 0;
  // Trials whose WMST contains any properly-crossing edge pair. Generic
  // crossings are ordinary WMST behavior; reported, not forbidden.
  int wmst_crossing_trials = 0;
  // Trials whose heuristic output violates planarity.
  int heuristic_nonplanar_trials = 0;
  int max_wmst_crossings = 0;
};

/// Random integer weights in [1, 77] on the fixed template; per trial records
/// whether the WMST shows the forbidden crossing pattern and whether the
/// heuristic output stays plane. Template convention: vertices 2 and 5 are
/// the near-touching apexes.
Assumption2Stats assumption2_experiment(int trials, std::uint64_t seed);
Assumption2Stats assumption2_experiment(const std::vector<Point>& vertex_template, int trials,
                                        std::uint64_t seed);

/// Whole-file atomic write (temp file + rename).
void write_file_atomic(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

}  // namespace wsmt
