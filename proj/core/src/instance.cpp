#include "wsmt/instance.hpp"

#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include "wsmt/heuristic.hpp"
#include "wsmt/wmst.hpp"

namespace wsmt {

namespace {

bool blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

double uniform_unit(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

int uniform_int(std::mt19937_64& gen, int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(gen() % span);
}

}  // namespace

Instance parse_instance(const std::string& text) {
  Instance inst;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  std::map<std::pair<double, double>, int> positions;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank_or_comment(line)) continue;
    std::istringstream fields(line);
    double x = 0.0, y = 0.0, w = 0.0;
    if (!(fields >> x >> y >> w)) {
      throw ParseError("expected 'x y w' on line " + std::to_string(line_no), line_no);
    }
    std::string tail;
    if (fields >> tail) {
      throw ParseError("trailing content on line " + std::to_string(line_no), line_no);
    }
    if (!std::isfinite(x) || !std::isfinite(y)) {
      throw ParseError("non-finite coordinate on line " + std::to_string(line_no), line_no);
    }
    if (!std::isfinite(w) || w <= 0.0) {
      throw WeightError("weight must be positive on line " + std::to_string(line_no), line_no);
    }
    if (!positions.insert({{x, y}, line_no}).second) {
      throw DuplicateTerminalError(
          "duplicate terminal position on line " + std::to_string(line_no), line_no);
    }
    const int id = static_cast<int>(inst.terminals.size());
    inst.terminals.push_back({id, {x, y}, w, VertexKind::Terminal});
    inst.insertion_order.push_back(id);
  }
  if (inst.terminals.empty()) {
    throw ParseError("instance contains no terminals", line_no);
  }
  return inst;
}

std::string write_instance(const std::vector<WeightedVertex>& terminals) {
  std::string out;
  char buf[128];
  for (const auto& t : terminals) {
    std::snprintf(buf, sizeof(buf), "%.6f %.6f %.6f\n", t.pos.x, t.pos.y, t.weight);
    out += buf;
  }
  return out;
}

Instance generate_random_instance(int n, int wmin, int wmax, std::uint64_t seed) {
  if (n < 1) throw Error("generate_random_instance: n must be >= 1");
  if (wmin < 1 || wmax < wmin) throw Error("generate_random_instance: bad weight range");
  std::mt19937_64 gen(seed);
  Instance inst;
  std::map<std::pair<double, double>, bool> used;
  while (static_cast<int>(inst.terminals.size()) < n) {
    // 6-decimal grid so the instance survives serialization untouched.
    const double x = std::round(uniform_unit(gen) * 100.0 * 1e6) / 1e6;
    const double y = std::round(uniform_unit(gen) * 100.0 * 1e6) / 1e6;
    if (used.count({x, y})) continue;
    used[{x, y}] = true;
    const int w = uniform_int(gen, wmin, wmax);
    const int id = static_cast<int>(inst.terminals.size());
    inst.terminals.push_back({id, {x, y}, static_cast<double>(w), VertexKind::Terminal});
    inst.insertion_order.push_back(id);
  }
  return inst;
}

std::vector<Point> assumption2_template() {
  // Two mirrored equilateral triangles, bases 60 and 30, apexes nearly
  // touching around x ~ 62..64, plus a seventh point in the gap.
  const double apex_left = 10.0 + 30.0 * std::numbers::sqrt3;
  const double apex_right = 90.0 - 15.0 * std::numbers::sqrt3;
  return {
      {10.0, 20.0}, {10.0, 80.0}, {apex_left, 50.0},
      {90.0, 35.0}, {90.0, 65.0}, {apex_right, 50.0},
      {63.0, 52.0},
  };
}

Assumption2Stats assumption2_experiment(int trials, std::uint64_t seed) {
  return assumption2_experiment(assumption2_template(), trials, seed);
}

Assumption2Stats assumption2_experiment(const std::vector<Point>& vertex_template, int trials,
                                        std::uint64_t seed) {
  if (trials < 1) throw Error("assumption2_experiment: trials must be >= 1");
  Assumption2Stats stats;
  stats.trials = trials;
  std::mt19937_64 gen(seed);
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<WeightedVertex> terminals;
    terminals.reserve(vertex_template.size());
    for (size_t i = 0; i < vertex_template.size(); ++i) {
      const int w = uniform_int(gen, 1, 77);
      terminals.push_back({static_cast<int>(i), vertex_template[i], static_cast<double>(w),
                           VertexKind::Terminal});
    }
    const PlaneTree wmst = weighted_mst(terminals);
    const auto pairs = crossing_edge_pairs(wmst);
    stats.wmst_crossing_trials += !pairs.empty();
    stats.max_wmst_crossings = std::max(stats.max_wmst_crossings, static_cast<int>(pairs.size()));
    const int apex_a = 2, apex_b = 5;
    auto touches = [](const Edge& e, int v) { return e.first == v || e.second == v; };
    for (const auto& [e, f] : pairs) {
      if ((touches(e, apex_a) && touches(f, apex_b)) ||
          (touches(e, apex_b) && touches(f, apex_a))) {
        ++stats.fig7_pattern_trials;
        break;
      }
    }

    const SolveResult solved = solve(terminals);
    stats.heuristic_nonplanar_trials += !solved.report.planarity.crossing_pairs.empty();
  }
  return stats;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + tmp + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw Error("short write to " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    throw Error("rename failed: " + std::string(std::strerror(errno)));
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace wsmt
