#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wsmt/heuristic.hpp"
#include "wsmt/instance.hpp"
#include "wsmt/oracle.hpp"
#include "wsmt/report_json.hpp"
#include "wsmt/svg.hpp"
#include "wsmt/wmst.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCap = 2;
constexpr int kExitNotConverged = 3;

wsmt::Instance load_instance(const std::string& path) {
  return wsmt::parse_instance(wsmt::read_file(path));
}

void maybe_write(const std::string& path, const std::string& content) {
  if (!path.empty()) wsmt::write_file_atomic(path, content);
}

struct SolveArgs {
  std::string instance_path;
  double tolerance = 0.022;
  std::string ordering = "input";
  std::string merge_policy = "keep";
  double tilt = 1.3;
  std::string svg_path;
  std::string json_path;
};

int run_solve(const SolveArgs& args) {
  const wsmt::Instance inst = load_instance(args.instance_path);
  wsmt::SolveConfig cfg;
  cfg.angle_tolerance_fraction = args.tolerance;
  cfg.ordering = args.ordering == "acutest" ? wsmt::Ordering::AcutestFirst
                                            : wsmt::Ordering::InputOrder;
  cfg.merge_policy = args.merge_policy == "adopt"
                         ? wsmt::MergePolicy::TerminalAdoptsSteinerWeight
                         : wsmt::MergePolicy::TerminalKeepsWeight;
  cfg.tilt_degrees = args.tilt;

  const wsmt::PlaneTree plane = wsmt::plane_weighted_mst(inst.terminals);
  const wsmt::SolveResult result = wsmt::solve(inst.terminals, cfg);

  const std::string json = wsmt::solve_report_json(
      result.report, cfg, static_cast<int>(inst.terminals.size()));
  maybe_write(args.json_path, json);
  if (!args.svg_path.empty()) {
    wsmt::RenderSpec spec;
    spec.phases = {wsmt::RenderPhase::Overlay};
    maybe_write(args.svg_path, wsmt::render_svg(plane, result, spec));
  }
  std::cout << json;
  return result.report.converged ? kExitOk : kExitNotConverged;
}

int run_wmst(const std::string& instance_path, bool plane, const std::string& svg_path,
             const std::string& json_path) {
  const wsmt::Instance inst = load_instance(instance_path);
  const wsmt::PlaneTree tree = plane ? wsmt::plane_weighted_mst(inst.terminals)
                                     : wsmt::weighted_mst(inst.terminals);
  const wsmt::TreeMetrics metrics = wsmt::tree_metrics(tree);
  const int crossings = static_cast<int>(wsmt::crossing_edge_pairs(tree).size());
  const std::string json = wsmt::tree_metrics_json(
      metrics, static_cast<int>(inst.terminals.size()), plane, crossings);
  maybe_write(json_path, json);
  maybe_write(svg_path, wsmt::render_svg(tree));
  std::cout << json;
  return kExitOk;
}

int run_oracle(const std::string& instance_path, const std::string& json_path) {
  const wsmt::Instance inst = load_instance(instance_path);
  const wsmt::OracleResult result = wsmt::oracle_wsmt(inst.terminals);
  const std::string json =
      wsmt::oracle_json(result, static_cast<int>(inst.terminals.size()));
  maybe_write(json_path, json);
  std::cout << json;
  return kExitOk;
}

int run_gen(int n, int wmin, int wmax, std::uint64_t seed, const std::string& out_path) {
  const wsmt::Instance inst = wsmt::generate_random_instance(n, wmin, wmax, seed);
  wsmt::write_file_atomic(out_path, wsmt::write_instance(inst.terminals));
  return kExitOk;
}

int run_assumption2(int trials, std::uint64_t seed, const std::string& json_path,
                    const std::string& template_path) {
  wsmt::Assumption2Stats stats;
  if (template_path.empty()) {
    stats = wsmt::assumption2_experiment(trials, seed);
  } else {
    const wsmt::Instance inst = load_instance(template_path);
    std::vector<wsmt::Point> pts;
    for (const auto& t : inst.terminals) pts.push_back(t.pos);
    stats = wsmt::assumption2_experiment(pts, trials, seed);
  }
  const std::string json = wsmt::assumption2_json(stats, seed);
  maybe_write(json_path, json);
  std::cout << json;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted Steiner minimal tree heuristic (soap-film detachment)"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Run the full heuristic on an instance");
  solve_cmd->add_option("instance", solve_args.instance_path, "Instance file (x y w per line)")
      ->required();
  solve_cmd->add_option("--tolerance", solve_args.tolerance,
                        "Angle tolerance as a fraction of 120 degrees");
  solve_cmd->add_option("--ordering", solve_args.ordering, "Vertex processing order")
      ->check(CLI::IsMember({"input", "acutest"}));
  solve_cmd->add_option("--merge-policy", solve_args.merge_policy,
                        "Weight bookkeeping on Steiner-terminal collisions")
      ->check(CLI::IsMember({"keep", "adopt"}));
  solve_cmd->add_option("--tilt", solve_args.tilt, "Stagnation tilt in degrees");
  solve_cmd->add_option("--svg", solve_args.svg_path, "Write an overlay SVG here");
  solve_cmd->add_option("--json", solve_args.json_path, "Write the JSON report here");

  std::string wmst_instance, wmst_svg, wmst_json;
  bool wmst_plane = false;
  auto* wmst_cmd = app.add_subcommand("wmst", "Compute the (plane) weighted MST");
  wmst_cmd->add_option("instance", wmst_instance, "Instance file")->required();
  wmst_cmd->add_flag("--plane", wmst_plane, "Crossing-free variant");
  wmst_cmd->add_option("--svg", wmst_svg, "Write an SVG here");
  wmst_cmd->add_option("--json", wmst_json, "Write JSON metrics here");

  std::string oracle_instance, oracle_json_path;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force optimum (up to 7 terminals)");
  oracle_cmd->add_option("instance", oracle_instance, "Instance file")->required();
  oracle_cmd->add_option("--json", oracle_json_path, "Write JSON results here");

  int gen_n = 0, gen_wmin = 1, gen_wmax = 9;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--n", gen_n, "Terminal count")->required();
  gen_cmd->add_option("--wmin", gen_wmin, "Minimum integer weight")->required();
  gen_cmd->add_option("--wmax", gen_wmax, "Maximum integer weight")->required();
  gen_cmd->add_option("--seed", gen_seed, "RNG seed")->required();
  gen_cmd->add_option("--out", gen_out, "Output path")->required();

  int a2_trials = 0;
  std::uint64_t a2_seed = 0;
  std::string a2_json, a2_template;
  auto* a2_cmd = app.add_subcommand("assumption2", "Randomized planarity experiment");
  a2_cmd->add_option("--trials", a2_trials, "Trial count")->required();
  a2_cmd->add_option("--seed", a2_seed, "RNG seed")->required();
  a2_cmd->add_option("--json", a2_json, "Write JSON statistics here");
  a2_cmd->add_option("--template", a2_template, "Override the built-in 7-vertex template");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve_cmd->parsed()) return run_solve(solve_args);
    if (wmst_cmd->parsed()) return run_wmst(wmst_instance, wmst_plane, wmst_svg, wmst_json);
    if (oracle_cmd->parsed()) return run_oracle(oracle_instance, oracle_json_path);
    if (gen_cmd->parsed()) return run_gen(gen_n, gen_wmin, gen_wmax, gen_seed, gen_out);
    if (a2_cmd->parsed()) return run_assumption2(a2_trials, a2_seed, a2_json, a2_template);
  } catch (const wsmt::CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const wsmt::InfeasiblePlaneTreeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const wsmt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
