#include "wsmt/heuristic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

namespace wsmt {

namespace {

struct AcutePair {
  int a = -1;
  int c = -1;
  double angle_deg = 360.0;
};

double pair_angle(const PlaneTree& tree, int apex, int a, int c) {
  return angle_at(tree.vertex(apex).pos, tree.vertex(a).pos, tree.vertex(c).pos);
}

// Most acute adjacent-edge pair at a vertex; nullopt for degree < 2 or when a
// neighbor coincides with the vertex (a zero edge awaiting a flick).
std::optional<AcutePair> most_acute_pair(const PlaneTree& tree, int id) {
  const std::vector<int> nbrs = tree.neighbors(id);
  if (nbrs.size() < 2) return std::nullopt;
  const Point apex = tree.vertex(id).pos;
  for (int n : nbrs) {
    if (euclid_dist(tree.vertex(n).pos, apex) == 0.0) return std::nullopt;
  }
  AcutePair best;
  for (size_t i = 0; i < nbrs.size(); ++i) {
    for (size_t j = i + 1; j < nbrs.size(); ++j) {
      const double ang = pair_angle(tree, id, nbrs[i], nbrs[j]);
      if (ang < best.angle_deg) {
        best = {nbrs[i], nbrs[j], ang};
      }
    }
  }
  return best;
}

std::vector<int> processing_order(const PlaneTree& tree, const SolveConfig& cfg) {
  std::vector<int> ids = tree.vertex_ids();
  if (cfg.ordering == Ordering::AcutestFirst) {
    std::vector<std::pair<double, int>> keyed;
    keyed.reserve(ids.size());
    for (int id : ids) {
      const auto pair = most_acute_pair(tree, id);
      keyed.emplace_back(pair ? pair->angle_deg : 360.0, id);
    }
    std::sort(keyed.begin(), keyed.end());
    ids.clear();
    for (const auto& [angle, id] : keyed) ids.push_back(id);
  }
  return ids;
}

double descent_length(const PlaneTree& tree, RelaxTension tension) {
  const TreeMetrics m = tree_metrics(tree);
  return tension == RelaxTension::Uniform ? m.euclidean_length : m.weighted_length;
}

TraceEvent make_event(const Trace& trace, EventKind kind) {
  TraceEvent ev;
  ev.step_index = static_cast<int>(trace.size());
  ev.kind = kind;
  return ev;
}

void finish_event(TraceEvent& ev, const PlaneTree& tree, double weighted_before, Trace& trace) {
  const TreeMetrics m = tree_metrics(tree);
  ev.weighted_length = m.weighted_length;
  ev.euclidean_length = m.euclidean_length;
  ev.weight_jump = m.weighted_length > weighted_before + 1e-12 * (1.0 + weighted_before);
  trace.push_back(std::move(ev));
}

double relax_factor(const SolveConfig& cfg, double w_self, double w_neighbor) {
  return cfg.relax_tension == RelaxTension::Uniform ? 1.0 : 0.5 * (w_self + w_neighbor);
}

void check_tree(const PlaneTree& tree, const char* phase) {
  if (!tree.is_tree()) {
    throw Error(std::string("pipeline invariant broken: not a tree after ") + phase);
  }
}

// Shared contraction scan: merges the endpoints of every edge shorter than
// eps. Terminal identity wins over Steiner; two terminals never merge.
bool contract_short_edges(PlaneTree& tree, const SolveConfig& cfg, double eps, Trace& trace) {
  bool changed = false;
  bool found = true;
  while (found) {
    found = false;
    for (const Edge& e : tree.edges()) {
      const auto& u = tree.vertex(e.first);
      const auto& v = tree.vertex(e.second);
      if (euclid_dist(u.pos, v.pos) >= eps) continue;
      if (u.kind == VertexKind::Terminal && v.kind == VertexKind::Terminal) continue;
      int keep = e.first, drop = e.second;
      if (v.kind == VertexKind::Terminal) std::swap(keep, drop);
      const bool terminal_merge = tree.vertex(keep).kind == VertexKind::Terminal;

      const double weighted_before = tree_metrics(tree).weighted_length;
      TraceEvent ev = make_event(trace, terminal_merge ? EventKind::CollisionMerge
                                                       : EventKind::ZeroEdgeFlick);
      ev.vertices = {keep, drop};
      ev.removed_edges = {e};
      ev.before = {{keep, tree.vertex(keep).pos}, {drop, tree.vertex(drop).pos}};
      if (terminal_merge) {
        if (cfg.merge_policy == MergePolicy::TerminalAdoptsSteinerWeight) {
          tree.vertex(keep).weight = tree.vertex(drop).weight;
        }
      } else {
        tree.vertex(keep).weight = std::min(u.weight, v.weight);
      }
      tree.contract_into(keep, drop);
      ev.after = {{keep, tree.vertex(keep).pos}};
      finish_event(ev, tree, weighted_before, trace);
      changed = true;
      found = true;
      break;
    }
  }
  return changed;
}

double point_segment_distance(Point p, Point a, Point b) {
  const Point d = b - a;
  const double len2 = dot(d, d);
  if (len2 == 0.0) return euclid_dist(p, a);
  const double t = std::clamp(dot(p - a, d) / len2, 0.0, 1.0);
  return euclid_dist(p, a + t * d);
}

}  // namespace

const char* event_kind_name(EventKind k) {
  switch (k) {
    case EventKind::SlideInherent: return "slide_inherent";
    case EventKind::Detach: return "detach";
    case EventKind::RelaxSnapshot: return "relax_snapshot";
    case EventKind::TopologySwap: return "topology_swap";
    case EventKind::CollisionMerge: return "collision_merge";
    case EventKind::ZeroEdgeFlick: return "zero_edge_flick";
  }
  return "unknown";
}

double absolute_collision_epsilon(const PlaneTree& tree, const SolveConfig& cfg) {
  double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;
  bool first = true;
  for (const auto& v : tree.vertices()) {
    if (v.kind != VertexKind::Terminal) continue;
    if (first) {
      xmin = xmax = v.pos.x;
      ymin = ymax = v.pos.y;
      first = false;
    } else {
      xmin = std::min(xmin, v.pos.x);
      xmax = std::max(xmax, v.pos.x);
      ymin = std::min(ymin, v.pos.y);
      ymax = std::max(ymax, v.pos.y);
    }
  }
  const double diag = std::hypot(xmax - xmin, ymax - ymin);
  return cfg.collision_epsilon * (diag > 0.0 ? diag : 1.0);
}

bool slide_inherent(PlaneTree& tree, const SolveConfig& cfg, Trace& trace) {
  bool changed = false;
  const int sweep_cap = 4 * static_cast<int>(tree.vertex_count() * tree.vertex_count()) + 8;
  for (int sweep = 0; sweep < sweep_cap; ++sweep) {
    bool fired = false;
    for (int b : processing_order(tree, cfg)) {
      const auto pair = most_acute_pair(tree, b);
      if (!pair || pair->angle_deg >= 120.0) continue;
      const int a = pair->a, c = pair->c;
      const Point pa = tree.vertex(a).pos;
      const Point pb = tree.vertex(b).pos;
      const Point pc = tree.vertex(c).pos;
      const double angle_a = angle_at(pa, pb, pc);
      const double angle_c = angle_at(pc, pa, pb);
      if (std::max(angle_a, angle_c) < 120.0) continue;

      const bool drop_ab = euclid_dist(pa, pb) >= euclid_dist(pc, pb);
      const Edge removed = drop_ab ? make_edge(a, b) : make_edge(c, b);
      // The replacement must keep the tree plane.
      const Segment ac{pa, pc};
      bool crosses = false;
      for (const Edge& e : tree.edges()) {
        if (e == removed) continue;
        if (segments_cross(ac, tree.edge_segment(e), true)) {
          crosses = true;
          break;
        }
      }
      if (crosses) continue;

      const double weighted_before = tree_metrics(tree).weighted_length;
      TraceEvent ev = make_event(trace, EventKind::SlideInherent);
      ev.vertices = {b, a, c};
      ev.removed_edges = {removed};
      ev.added_edges = {make_edge(a, c)};
      tree.remove_edge(removed.first, removed.second);
      tree.add_edge(a, c);
      finish_event(ev, tree, weighted_before, trace);
      fired = true;
      changed = true;
    }
    if (!fired) break;
  }
  check_tree(tree, "slide_inherent");
  return changed;
}

bool detach_steiner(PlaneTree& tree, const SolveConfig& cfg, Trace& trace) {
  bool changed = false;
  const double threshold = cfg.angle_threshold_deg();
  for (int b : processing_order(tree, cfg)) {
    if (!tree.contains(b)) continue;
    const auto& vb = tree.vertex(b);
    if (vb.kind == VertexKind::Steiner && tree.degree(b) == 2) continue;
    const auto pair = most_acute_pair(tree, b);
    if (!pair || pair->angle_deg >= threshold) continue;
    const int a = pair->a, c = pair->c;
    const Point pa = tree.vertex(a).pos;
    const Point pc = tree.vertex(c).pos;
    if (pa == pc) continue;
    const FermatResult fr = fermat_point(pa, vb.pos, pc);
    if (fr.inherent) continue;  // a sliding situation, not a detachment

    const double w_s =
        std::min({tree.vertex(a).weight, vb.weight, tree.vertex(c).weight});
    const double weighted_before = tree_metrics(tree).weighted_length;
    TraceEvent ev = make_event(trace, EventKind::Detach);
    const int s = tree.add_vertex(fr.point, w_s, VertexKind::Steiner);
    tree.remove_edge(a, b);
    tree.remove_edge(c, b);
    tree.add_edge(a, s);
    tree.add_edge(b, s);
    tree.add_edge(c, s);
    ev.vertices = {b, a, c, s};
    ev.removed_edges = {make_edge(a, b), make_edge(c, b)};
    ev.added_edges = {make_edge(a, s), make_edge(b, s), make_edge(c, s)};
    ev.after = {{s, fr.point}};
    finish_event(ev, tree, weighted_before, trace);
    changed = true;
  }
  check_tree(tree, "detach_steiner");
  return changed;
}

RelaxOutcome relax(PlaneTree& tree, const SolveConfig& cfg, Trace& trace) {
  RelaxOutcome outcome;
  std::vector<int> steiner_ids;
  for (const auto& v : tree.vertices()) {
    if (v.kind == VertexKind::Steiner) steiner_ids.push_back(v.id);
  }
  if (steiner_ids.empty()) return outcome;

  std::set<Edge> tilted_edges;
  double obj = descent_length(tree, cfg.relax_tension);
  bool perturbed_next = false;

  DescentOptions opts;
  opts.max_iterations = 600;

  for (int sweep = 1; sweep <= cfg.relax_step_cap; ++sweep) {
    for (int s : steiner_ids) {
      const std::vector<int> nbrs = tree.neighbors(s);
      if (nbrs.size() < 2) continue;
      std::vector<WeightedAnchor> anchors;
      anchors.reserve(nbrs.size());
      const double w_s = tree.vertex(s).weight;
      for (int n : nbrs) {
        anchors.push_back({tree.vertex(n).pos, relax_factor(cfg, w_s, tree.vertex(n).weight)});
      }
      tree.vertex(s).pos = weighted_fermat_point(anchors, tree.vertex(s).pos, opts).point;
    }
    outcome.sweeps = sweep;
    const TreeMetrics m = tree_metrics(tree);
    const double new_obj =
        cfg.relax_tension == RelaxTension::Uniform ? m.euclidean_length : m.weighted_length;
    TraceEvent ev = make_event(trace, EventKind::RelaxSnapshot);
    ev.weighted_length = m.weighted_length;
    ev.euclidean_length = m.euclidean_length;
    ev.perturbed = perturbed_next;
    ev.sweeps = sweep;
    trace.push_back(std::move(ev));
    perturbed_next = false;

    const bool stagnated = obj - new_obj < 1e-10 * std::max(new_obj, 1e-300);
    obj = new_obj;
    if (!stagnated) continue;

    if (!steiner_angles_ok(tree, cfg) && cfg.tilt_degrees != 0.0) {
      // Stagnation with a violated angle check: tilt one stagnating
      // Steiner-Steiner edge, once per edge per call.
      std::set<int> violating;
      for (int s : steiner_ids) {
        const auto pair = most_acute_pair(tree, s);
        if (pair && pair->angle_deg < cfg.angle_threshold_deg()) violating.insert(s);
      }
      const Edge* to_tilt = nullptr;
      for (const Edge& e : tree.edges()) {
        if (tree.vertex(e.first).kind != VertexKind::Steiner ||
            tree.vertex(e.second).kind != VertexKind::Steiner) {
          continue;
        }
        if (!violating.count(e.first) && !violating.count(e.second)) continue;
        if (tilted_edges.count(e)) continue;
        to_tilt = &e;
        break;
      }
      if (to_tilt) {
        const Point m1 = tree.vertex(to_tilt->first).pos;
        const Point m2 = tree.vertex(to_tilt->second).pos;
        const Point center = midpoint(m1, m2);
        tree.vertex(to_tilt->first).pos = rotate_around(m1, center, -cfg.tilt_degrees);
        tree.vertex(to_tilt->second).pos = rotate_around(m2, center, -cfg.tilt_degrees);
        tilted_edges.insert(*to_tilt);
        outcome.tilted = true;
        perturbed_next = true;
        obj = descent_length(tree, cfg.relax_tension);
        continue;
      }
    }
    return outcome;
  }
  outcome.hit_cap = true;
  return outcome;
}

bool flick_zero_edges(PlaneTree& tree, const SolveConfig& cfg, Trace& trace) {
  const double eps = absolute_collision_epsilon(tree, cfg);
  bool changed = contract_short_edges(tree, cfg, eps, trace);

  bool found = true;
  while (found) {
    found = false;
    for (const auto& v : tree.vertices()) {
      if (v.kind != VertexKind::Steiner) continue;
      const std::vector<int> nbrs = tree.neighbors(v.id);
      if (nbrs.size() == 1 || nbrs.empty()) {
        // Dangling film strip: remove it.
        const double weighted_before = tree_metrics(tree).weighted_length;
        TraceEvent ev = make_event(trace, EventKind::ZeroEdgeFlick);
        ev.vertices = {v.id};
        ev.before = {{v.id, v.pos}};
        if (!nbrs.empty()) {
          ev.removed_edges = {make_edge(v.id, nbrs[0])};
          tree.remove_edge(v.id, nbrs[0]);
        }
        tree.remove_isolated_vertex(v.id);
        finish_event(ev, tree, weighted_before, trace);
        changed = true;
        found = true;
        break;
      }
      if (nbrs.size() == 2) {
        const Point pa = tree.vertex(nbrs[0]).pos;
        const Point pb = tree.vertex(nbrs[1]).pos;
        // Collinear within tolerance: either metrically on the segment or
        // bent by less than a tenth of a degree (the residual slack the
        // relaxation stall can leave behind).
        const bool on_segment = point_segment_distance(v.pos, pa, pb) <= eps;
        const bool straight = euclid_dist(v.pos, pa) > 0.0 && euclid_dist(v.pos, pb) > 0.0 &&
                              angle_at(v.pos, pa, pb) >= 179.9;
        if (!on_segment && !straight) continue;
        const double weighted_before = tree_metrics(tree).weighted_length;
        TraceEvent ev = make_event(trace, EventKind::ZeroEdgeFlick);
        ev.vertices = {v.id, nbrs[0], nbrs[1]};
        ev.removed_edges = {make_edge(v.id, nbrs[0]), make_edge(v.id, nbrs[1])};
        ev.added_edges = {make_edge(nbrs[0], nbrs[1])};
        ev.before = {{v.id, v.pos}};
        tree.remove_edge(v.id, nbrs[0]);
        tree.remove_edge(v.id, nbrs[1]);
        tree.add_edge(nbrs[0], nbrs[1]);
        tree.remove_isolated_vertex(v.id);
        finish_event(ev, tree, weighted_before, trace);
        changed = true;
        found = true;
        break;
      }
    }
    if (contract_short_edges(tree, cfg, eps, trace)) {
      changed = true;
      found = true;
    }
  }
  check_tree(tree, "flick_zero_edges");
  return changed;
}

namespace {

// Re-pairs the four outer neighbors of the junction pair across the
// contracted edge, reseeds both Steiner points at the weighted Fermat points
// of the re-paired triples and relaxes. Returns the relaxed weighted length.
double evaluate_repairing(PlaneTree candidate, int s1, int s2, int move_to_s1, int move_to_s2,
                          const SolveConfig& cfg) {
  // s1 loses move_to_s2 to s2 and gains move_to_s1 from s2.
  candidate.remove_edge(s1, move_to_s2);
  candidate.remove_edge(s2, move_to_s1);
  candidate.add_edge(s1, move_to_s1);
  candidate.add_edge(s2, move_to_s2);

  auto reseed = [&](int s) {
    std::vector<WeightedAnchor> anchors;
    const double w_s = candidate.vertex(s).weight;
    for (int n : candidate.neighbors(s)) {
      anchors.push_back(
          {candidate.vertex(n).pos, relax_factor(cfg, w_s, candidate.vertex(n).weight)});
    }
    candidate.vertex(s).pos =
        weighted_fermat_point(anchors, candidate.vertex(s).pos).point;
  };
  reseed(s1);
  reseed(s2);
  Trace scratch;
  relax(candidate, cfg, scratch);
  return tree_metrics(candidate).weighted_length;
}

void apply_repairing(PlaneTree& tree, int s1, int s2, int move_to_s1, int move_to_s2,
                     const SolveConfig& cfg, Trace& trace) {
  const double weighted_before = tree_metrics(tree).weighted_length;
  TraceEvent ev = make_event(trace, EventKind::TopologySwap);
  ev.vertices = {s1, s2};
  ev.before = {{s1, tree.vertex(s1).pos}, {s2, tree.vertex(s2).pos}};
  ev.removed_edges = {make_edge(s1, move_to_s2), make_edge(s2, move_to_s1)};
  ev.added_edges = {make_edge(s1, move_to_s1), make_edge(s2, move_to_s2)};
  tree.remove_edge(s1, move_to_s2);
  tree.remove_edge(s2, move_to_s1);
  tree.add_edge(s1, move_to_s1);
  tree.add_edge(s2, move_to_s2);
  auto reseed = [&](int s) {
    std::vector<WeightedAnchor> anchors;
    const double w_s = tree.vertex(s).weight;
    for (int n : tree.neighbors(s)) {
      anchors.push_back({tree.vertex(n).pos, relax_factor(cfg, w_s, tree.vertex(n).weight)});
    }
    tree.vertex(s).pos = weighted_fermat_point(anchors, tree.vertex(s).pos).point;
  };
  reseed(s1);
  reseed(s2);
  Trace scratch;
  relax(tree, cfg, scratch);
  ev.after = {{s1, tree.vertex(s1).pos}, {s2, tree.vertex(s2).pos}};
  finish_event(ev, tree, weighted_before, trace);
}

// Splits a collapsed degree-4 Steiner junction into the cheapest of the three
// pairings of its neighbors.
bool split_degree4(PlaneTree& tree, int s, const SolveConfig& cfg, Trace& trace) {
  const std::vector<int> nbrs = tree.neighbors(s);
  if (nbrs.size() != 4) return false;
  const int pairings[3][4] = {{nbrs[0], nbrs[1], nbrs[2], nbrs[3]},
                              {nbrs[0], nbrs[2], nbrs[1], nbrs[3]},
                              {nbrs[0], nbrs[3], nbrs[1], nbrs[2]}};
  double best_len = std::numeric_limits<double>::infinity();
  int best = -1;
  for (int p = 0; p < 3; ++p) {
    PlaneTree candidate = tree;
    const int s2 =
        candidate.add_vertex(candidate.vertex(s).pos, candidate.vertex(s).weight,
                             VertexKind::Steiner);
    candidate.remove_edge(s, pairings[p][2]);
    candidate.remove_edge(s, pairings[p][3]);
    candidate.add_edge(s2, pairings[p][2]);
    candidate.add_edge(s2, pairings[p][3]);
    candidate.add_edge(s, s2);
    Trace scratch;
    relax(candidate, cfg, scratch);
    const double len = tree_metrics(candidate).weighted_length;
    if (len < best_len) {
      best_len = len;
      best = p;
    }
  }

  const double weighted_before = tree_metrics(tree).weighted_length;
  TraceEvent ev = make_event(trace, EventKind::TopologySwap);
  const int s2 = tree.add_vertex(tree.vertex(s).pos, tree.vertex(s).weight, VertexKind::Steiner);
  tree.remove_edge(s, pairings[best][2]);
  tree.remove_edge(s, pairings[best][3]);
  tree.add_edge(s2, pairings[best][2]);
  tree.add_edge(s2, pairings[best][3]);
  tree.add_edge(s, s2);
  ev.vertices = {s, s2};
  ev.removed_edges = {make_edge(s, pairings[best][2]), make_edge(s, pairings[best][3])};
  ev.added_edges = {make_edge(s2, pairings[best][2]), make_edge(s2, pairings[best][3]),
                    make_edge(s, s2)};
  ev.before = {{s, tree.vertex(s).pos}};
  Trace scratch;
  relax(tree, cfg, scratch);
  ev.after = {{s, tree.vertex(s).pos}, {s2, tree.vertex(s2).pos}};
  finish_event(ev, tree, weighted_before, trace);
  return true;
}

}  // namespace

bool apply_topology_rule(PlaneTree& tree, const SolveConfig& cfg, Trace& trace) {
  const double eps = absolute_collision_epsilon(tree, cfg);
  bool changed = false;

  // Collapsed junctions first: a degree-4 Steiner vertex is the S1 = S2 case.
  bool found = true;
  while (found) {
    found = false;
    for (const auto& v : tree.vertices()) {
      if (v.kind != VertexKind::Steiner) continue;
      const int deg = tree.degree(v.id);
      if (deg == 4) {
        if (split_degree4(tree, v.id, cfg, trace)) {
          changed = true;
          found = true;
          break;
        }
      } else if (deg > 4) {
        // Peel the most acute pair off the junction, then rescan.
        const int sid = v.id;
        const Point spos = v.pos;
        const double sw = v.weight;
        const auto pair = most_acute_pair(tree, sid);
        if (!pair) continue;
        const double weighted_before = tree_metrics(tree).weighted_length;
        TraceEvent ev = make_event(trace, EventKind::TopologySwap);
        const int s2 = tree.add_vertex(spos, sw, VertexKind::Steiner);
        tree.remove_edge(sid, pair->a);
        tree.remove_edge(sid, pair->c);
        tree.add_edge(s2, pair->a);
        tree.add_edge(s2, pair->c);
        tree.add_edge(sid, s2);
        ev.vertices = {sid, s2};
        Trace scratch;
        relax(tree, cfg, scratch);
        finish_event(ev, tree, weighted_before, trace);
        changed = true;
        found = true;
        break;
      }
    }
  }

  // Ratio rule on Steiner-Steiner edges.
  const int pass_cap = static_cast<int>(tree.vertex_count()) + 4;
  for (int pass = 0; pass < pass_cap; ++pass) {
    bool fired = false;
    const std::vector<Edge> edges(tree.edges().begin(), tree.edges().end());
    for (const Edge& e : edges) {
      if (!tree.contains(e.first) || !tree.contains(e.second)) continue;
      if (!tree.has_edge(e.first, e.second)) continue;
      const auto& s1v = tree.vertex(e.first);
      const auto& s2v = tree.vertex(e.second);
      if (s1v.kind != VertexKind::Steiner || s2v.kind != VertexKind::Steiner) continue;
      if (tree.degree(e.first) != 3 || tree.degree(e.second) != 3) continue;

      const double len = euclid_dist(s1v.pos, s2v.pos);
      int below = 0, usable = 0;
      for (int side = 0; side < 2; ++side) {
        const int s = side == 0 ? e.first : e.second;
        const int other = side == 0 ? e.second : e.first;
        for (int p : tree.neighbors(s)) {
          if (p == other) continue;
          const double seg = euclid_dist(tree.vertex(p).pos, tree.vertex(s).pos);
          if (seg <= eps) continue;  // another collapse; contraction handles it
          ++usable;
          if (len / seg < SolveConfig::kTopologyRatio - 1e-12) ++below;
        }
      }
      if (usable < 3 || below < 3) continue;

      std::vector<int> n1 = tree.neighbors(e.first);
      std::vector<int> n2 = tree.neighbors(e.second);
      n1.erase(std::remove(n1.begin(), n1.end(), e.second), n1.end());
      n2.erase(std::remove(n2.begin(), n2.end(), e.first), n2.end());
      const double current = tree_metrics(tree).weighted_length;
      // Keep n1[0] with s1; the two re-pairings swap n1[1] against one of
      // s2's neighbors.
      const double alt1 = evaluate_repairing(tree, e.first, e.second, n2[0], n1[1], cfg);
      const double alt2 = evaluate_repairing(tree, e.first, e.second, n2[1], n1[1], cfg);
      const double best = std::min(alt1, alt2);
      if (best >= current - 1e-12 * (1.0 + current)) continue;
      if (alt1 <= alt2) {
        apply_repairing(tree, e.first, e.second, n2[0], n1[1], cfg, trace);
      } else {
        apply_repairing(tree, e.first, e.second, n2[1], n1[1], cfg, trace);
      }
      changed = true;
      fired = true;
      break;
    }
    if (!fired) break;
  }

  // Collisions produced by the swaps.
  if (contract_short_edges(tree, cfg, eps, trace)) changed = true;
  check_tree(tree, "apply_topology_rule");
  return changed;
}

bool steiner_angles_ok(const PlaneTree& tree, const SolveConfig& cfg) {
  const double threshold = cfg.angle_threshold_deg();
  for (const auto& v : tree.vertices()) {
    if (v.kind != VertexKind::Steiner) continue;
    const auto pair = most_acute_pair(tree, v.id);
    if (pair && pair->angle_deg < threshold) return false;
  }
  return true;
}

double min_steiner_pair_angle(const PlaneTree& tree) {
  double best = 180.0;
  for (const auto& v : tree.vertices()) {
    if (v.kind != VertexKind::Steiner) continue;
    const auto pair = most_acute_pair(tree, v.id);
    if (pair) best = std::min(best, pair->angle_deg);
  }
  return best;
}

SolveResult solve_tree(PlaneTree initial, const SolveConfig& cfg) {
  SolveResult result;
  const TreeMetrics initial_metrics = tree_metrics(initial);
  result.tree = std::move(initial);
  PlaneTree& tree = result.tree;
  check_tree(tree, "initialization");

  const int terminals = tree.terminal_count();
  const int cap =
      cfg.max_outer_iterations > 0 ? cfg.max_outer_iterations : 50 * std::max(1, terminals);

  bool converged = false;
  int iterations = 0;
  while (iterations < cap) {
    bool fired = false;
    fired |= slide_inherent(tree, cfg, result.trace);
    fired |= detach_steiner(tree, cfg, result.trace);
    relax(tree, cfg, result.trace);
    fired |= flick_zero_edges(tree, cfg, result.trace);
    fired |= apply_topology_rule(tree, cfg, result.trace);
    ++iterations;
    const bool angles_ok = steiner_angles_ok(tree, cfg);
    if (!fired) {
      converged = angles_ok;
      break;
    }
  }

  SolveReport& report = result.report;
  report.wmst_metrics = initial_metrics;
  report.plane_wmst_metrics = initial_metrics;
  report.final_metrics = tree_metrics(tree);
  report.ratio_weighted = report.plane_wmst_metrics.weighted_length > 0.0
                              ? report.final_metrics.weighted_length /
                                    report.plane_wmst_metrics.weighted_length
                              : 1.0;
  report.ratio_euclidean = report.plane_wmst_metrics.euclidean_length > 0.0
                               ? report.final_metrics.euclidean_length /
                                     report.plane_wmst_metrics.euclidean_length
                               : 1.0;
  report.iterations = iterations;
  report.converged = converged;
  report.steiner_count = tree.steiner_count();
  report.min_steiner_angle_deg = min_steiner_pair_angle(tree);
  for (const TraceEvent& ev : result.trace) {
    ++report.event_counts[ev.kind];
    report.weight_jump_events += ev.weight_jump && ev.kind != EventKind::RelaxSnapshot;
  }
  report.planarity.crossing_pairs = crossing_edge_pairs(tree);
  return result;
}

SolveResult solve(const std::vector<WeightedVertex>& terminals, const SolveConfig& cfg) {
  const PlaneTree wmst_tree = weighted_mst(terminals);
  PlaneTree plane = plane_weighted_mst(terminals);
  SolveResult result = solve_tree(std::move(plane), cfg);
  result.report.wmst_metrics = tree_metrics(wmst_tree);
  return result;
}

}  // namespace wsmt
