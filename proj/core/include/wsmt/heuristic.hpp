#pragma once

#include <cmath>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "wsmt/tree.hpp"
#include "wsmt/wmst.hpp"

namespace wsmt {

enum class Ordering { InputOrder, AcutestFirst };

/// Weight bookkeeping when a Steiner point collides with a terminal.
/// TerminalKeepsWeight leaves the terminal as entered; the reattached edges
/// can get more expensive. TerminalAdoptsSteinerWeight overwrites the
/// terminal's weight with the colliding Steiner point's.
enum class MergePolicy { TerminalKeepsWeight, TerminalAdoptsSteinerWeight };

/// Junction tension model used by relaxation. Uniform moves every Steiner
/// vertex toward the plain Fermat point of its neighbors (the soap film has
/// one surface tension, so junctions equilibrate at 120 degrees); Weighted
/// descends on the weighted total length with factors (w_S + w_neighbor)/2.
enum class RelaxTension { Uniform, Weighted };

struct SolveConfig {
  double angle_tolerance_fraction = 0.022;  // fraction of 120 deg accepted as deficit
  int relax_step_cap = 2000;                // coordinate-descent sweeps per relax call
  double collision_epsilon = 1e-6;          // fraction of the terminal bbox diagonal
  double tilt_degrees = 1.3;                // symmetry-breaking nudge on stagnation
  Ordering ordering = Ordering::InputOrder;
  MergePolicy merge_policy = MergePolicy::TerminalKeepsWeight;
  RelaxTension relax_tension = RelaxTension::Uniform;
  int max_outer_iterations = 0;  // 0 = 50 * terminal count

  static constexpr double kTopologyRatio = std::numbers::sqrt3 - 1.0;

  double angle_threshold_deg() const { return 120.0 * (1.0 - angle_tolerance_fraction); }
};

enum class EventKind {
  SlideInherent,
  Detach,
  RelaxSnapshot,
  TopologySwap,
  CollisionMerge,
  ZeroEdgeFlick,
};

const char* event_kind_name(EventKind k);

struct PositionedVertex {
  int id = -1;
  Point pos;
};

struct TraceEvent {
  int step_index = 0;
  EventKind kind = EventKind::RelaxSnapshot;
  std::vector<int> vertices;      // affected vertex ids
  std::vector<Edge> removed_edges;
  std::vector<Edge> added_edges;
  std::vector<PositionedVertex> before;
  std::vector<PositionedVertex> after;
  double weighted_length = 0.0;   // after the event
  double euclidean_length = 0.0;  // after the event
  // True when the event raised the weighted length (merge-weight bookkeeping).
  bool weight_jump = false;
  // RelaxSnapshot only: this sweep follows a tilt perturbation.
  bool perturbed = false;
  int sweeps = 0;  // RelaxSnapshot only: sweep number within the relax call
};

using Trace = std::vector<TraceEvent>;

struct PlanarityDiagnostic {
  std::vector<std::pair<Edge, Edge>> crossing_pairs;
};

struct SolveReport {
  TreeMetrics wmst_metrics;
  TreeMetrics plane_wmst_metrics;
  TreeMetrics final_metrics;
  double ratio_weighted = 1.0;   // final / plane-WMST weighted length
  double ratio_euclidean = 1.0;  // final / plane-WMST Euclidean length
  std::map<EventKind, int> event_counts;
  int weight_jump_events = 0;
  int iterations = 0;
  bool converged = false;
  int steiner_count = 0;
  double min_steiner_angle_deg = 180.0;
  PlanarityDiagnostic planarity;
};

struct SolveResult {
  PlaneTree tree;
  SolveReport report;
  Trace trace;
};

/// One pass of inherent-Steiner sliding, repeated until no vertex qualifies:
/// a vertex B whose most acute adjacent pair (A, C) is below 120 deg gets the
/// longer of AB, CB replaced by AC whenever the opposite corner reaches 120.
bool slide_inherent(PlaneTree& tree, const SolveConfig& cfg, Trace& trace);

/// One sweep of Steiner-point detachment: every vertex whose most acute
/// adjacent pair is below the angle threshold gets a new Steiner point at the
/// Fermat point of that triangle, weighted min{w(A), w(B), w(C)}.
bool detach_steiner(PlaneTree& tree, const SolveConfig& cfg, Trace& trace);

struct RelaxOutcome {
  int sweeps = 0;
  bool hit_cap = false;
  bool tilted = false;
};

/// Coordinate-descent sweeps moving each Steiner vertex to the (weighted)
/// Fermat point of its neighbors; terminals stay fixed. Applies the one-time
/// tilt to a stagnating Steiner-Steiner edge when angle checks still fail.
RelaxOutcome relax(PlaneTree& tree, const SolveConfig& cfg, Trace& trace);

/// Contracts edges shorter than the collision epsilon (terminal identity wins
/// over Steiner), splices out collinear degree-2 Steiner vertices and prunes
/// dangling Steiner leaves.
bool flick_zero_edges(PlaneTree& tree, const SolveConfig& cfg, Trace& trace);

/// Assumption-style topology repair: a Steiner-Steiner edge short relative to
/// at least three of its four incident segments (collapsed junctions
/// included) is re-paired across the contracted edge; the better re-pairing
/// is kept only when it shortens the weighted length after relaxation.
bool apply_topology_rule(PlaneTree& tree, const SolveConfig& cfg, Trace& trace);

/// True when every adjacent-edge pair at every Steiner vertex meets the
/// configured angle threshold.
bool steiner_angles_ok(const PlaneTree& tree, const SolveConfig& cfg);
double min_steiner_pair_angle(const PlaneTree& tree);

/// Full pipeline from the terminals: plane WMST, then
/// {slide; detach; relax; flick; topology rule} until quiescent.
SolveResult solve(const std::vector<WeightedVertex>& terminals, const SolveConfig& cfg = {});

/// The same loop started from a caller-supplied tree (its terminal vertices
/// are the instance). wmst/plane-WMST metrics in the report refer to the
/// initial tree.
SolveResult solve_tree(PlaneTree initial, const SolveConfig& cfg = {});

/// Collision epsilon in absolute units for this tree's terminal extent.
double absolute_collision_epsilon(const PlaneTree& tree, const SolveConfig& cfg);

}  // namespace wsmt
