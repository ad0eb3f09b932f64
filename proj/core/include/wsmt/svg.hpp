#pragma once

#include <set>
#include <string>

#include "wsmt/heuristic.hpp"
#include "wsmt/tree.hpp"

namespace wsmt {

enum class RenderPhase { WMST, PlaneWMST, Slide, Detach, Final, Overlay };

struct RenderSpec {
  std::set<RenderPhase> phases{RenderPhase::Final};
  double canvas_size = 800.0;
  std::string final_color = "black";
  std::string initial_color = "#bbbbbb";
  std::string replaced_color = "cyan";   // edges replaced by slides/detachments
  std::string trigger_color = "red";     // edges that triggered an event
};

/// Deterministic standalone SVG 1.1 document of a single tree: terminals as
/// labeled disks with weight annotations, Steiner points as smaller disks.
std::string render_svg(const PlaneTree& tree, const RenderSpec& spec = {});

/// Phase rendering of a solve: the initial tree, edges replaced along the
/// way (from the trace) and the final tree, per the selected phases.
std::string render_svg(const PlaneTree& initial, const SolveResult& result,
                       const RenderSpec& spec);

}  // namespace wsmt
