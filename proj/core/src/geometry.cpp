#include "wsmt/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace wsmt {

namespace {

constexpr double kDegPerRad = 180.0 / std::numbers::pi;

double clamp_unit(double v) { return std::clamp(v, -1.0, 1.0); }

// Diagonal of the bounding box of a point set; scale reference for epsilons.
double bbox_diagonal(std::span<const Point> pts) {
  double xmin = pts[0].x, xmax = pts[0].x, ymin = pts[0].y, ymax = pts[0].y;
  for (const Point& p : pts) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  return std::hypot(xmax - xmin, ymax - ymin);
}

}  // namespace

Point rotate_around(Point p, Point center, double degrees) {
  const double rad = degrees / kDegPerRad;
  const double c = std::cos(rad), s = std::sin(rad);
  const Point d = p - center;
  return {center.x + c * d.x - s * d.y, center.y + s * d.x + c * d.y};
}

double euclid_dist(Point p, Point q) { return std::hypot(p.x - q.x, p.y - q.y); }

double connection_cost(double wu, Point u, double wv, Point v) {
  return 0.5 * (wu + wv) * euclid_dist(u, v);
}

double connection_cost(const WeightedVertex& u, const WeightedVertex& v) {
  return connection_cost(u.weight, u.pos, v.weight, v.pos);
}

double angle_at(Point apex, Point a, Point b) {
  const Point u = a - apex;
  const Point v = b - apex;
  const double nu = norm(u), nv = norm(v);
  if (nu == 0.0 || nv == 0.0) {
    throw DegenerateAngleError("angle_at: ray endpoint coincides with apex");
  }
  return std::acos(clamp_unit(dot(u, v) / (nu * nv))) * kDegPerRad;
}

namespace {

// Orientation sign with a scale-relative collinearity band:
// |cross| <= 1e-9 * diag^2 counts as collinear.
int orient_sign(Point a, Point b, Point c, double eps_area) {
  const double v = cross(b - a, c - a);
  if (std::abs(v) <= eps_area) return 0;
  return v > 0.0 ? 1 : -1;
}

bool on_segment(Point p, const Segment& s, double eps_area, double eps_len) {
  if (orient_sign(s.a, s.b, p, eps_area) != 0) return false;
  const double t = dot(p - s.a, s.b - s.a);
  const double len2 = dot(s.b - s.a, s.b - s.a);
  if (len2 == 0.0) return euclid_dist(p, s.a) <= eps_len;
  return t >= -eps_len * std::sqrt(len2) && t <= len2 + eps_len * std::sqrt(len2);
}

bool points_equal(Point a, Point b, double eps_len) { return euclid_dist(a, b) <= eps_len; }

}  // namespace

bool segments_cross(const Segment& s1, const Segment& s2, bool shared_endpoint_ok) {
  const std::array<Point, 4> pts{s1.a, s1.b, s2.a, s2.b};
  const double diag = bbox_diagonal(pts);
  const double eps_area = 1e-9 * diag * diag;
  const double eps_len = 1e-9 * diag;

  const int d1 = orient_sign(s1.a, s1.b, s2.a, eps_area);
  const int d2 = orient_sign(s1.a, s1.b, s2.b, eps_area);
  const int d3 = orient_sign(s2.a, s2.b, s1.a, eps_area);
  const int d4 = orient_sign(s2.a, s2.b, s1.b, eps_area);

  // Proper crossing: interiors intersect regardless of the endpoint rule.
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;

  const bool touches = on_segment(s2.a, s1, eps_area, eps_len) ||
                       on_segment(s2.b, s1, eps_area, eps_len) ||
                       on_segment(s1.a, s2, eps_area, eps_len) ||
                       on_segment(s1.b, s2, eps_area, eps_len);
  if (!touches) return false;
  if (!shared_endpoint_ok) return true;

  // Contact exists; decide whether it is confined to a common endpoint.
  Point q1{}, q2{};
  int shared_count = 0;
  for (Point e1 : {s1.a, s1.b}) {
    for (Point e2 : {s2.a, s2.b}) {
      if (points_equal(e1, e2, eps_len)) {
        ++shared_count;
        q1 = (points_equal(e1, s1.a, 0.0)) ? s1.b : s1.a;
        q2 = (points_equal(e2, s2.a, 0.0)) ? s2.b : s2.a;
      }
    }
  }
  if (shared_count == 0) return true;   // touch elsewhere (T-contact etc.)
  if (shared_count > 1) return true;    // identical / degenerate overlap

  // One shared endpoint p: overlap beyond p happens only when both far ends
  // lie on the same ray from p.
  const Point p = points_equal(s1.a, s2.a, eps_len) || points_equal(s1.a, s2.b, eps_len)
                      ? s1.a
                      : s1.b;
  const Point u = q1 - p;
  const Point v = q2 - p;
  if (std::abs(cross(u, v)) <= eps_area && dot(u, v) > 0.0) return true;
  return false;
}

FermatResult fermat_point(Point a, Point b, Point c) {
  if (a == b || b == c || a == c) {
    throw DegenerateTriangleError("fermat_point: input points must be pairwise distinct");
  }
  const std::array<Point, 3> corner{a, b, c};
  const std::array<double, 3> ang{angle_at(a, b, c), angle_at(b, a, c), angle_at(c, a, b)};
  for (int i = 0; i < 3; ++i) {
    if (ang[i] >= 120.0) {
      return {corner[i], true, i};
    }
  }

  // All angles < 120: intersect two Simpson lines. The apex of the outward
  // equilateral triangle on a side connects to the opposite corner; two such
  // lines meet at the Torricelli point.
  auto outward_apex = [](Point u, Point v, Point opposite) {
    const Point m = midpoint(u, v);
    const Point d = v - u;
    Point n{-d.y, d.x};  // perpendicular, length |uv|
    const double h = std::numbers::sqrt3 / 2.0;
    Point apex1 = m + h * n;
    Point apex2 = m - h * n;
    // Pick the apex on the far side from the opposite corner.
    return (cross(d, opposite - u) * cross(d, apex1 - u) < 0.0) ? apex1 : apex2;
  };
  const Point e_ab = outward_apex(a, b, c);
  const Point e_bc = outward_apex(b, c, a);
  // Solve e_ab + t (c - e_ab) = e_bc + s (a - e_bc).
  const Point r = c - e_ab;
  const Point s = a - e_bc;
  const double denom = cross(r, s);
  const Point diff = e_bc - e_ab;
  // denom != 0 whenever all angles are < 120 (the lines are not parallel).
  const double t = cross(diff, s) / denom;
  return {e_ab + t * r, false, std::nullopt};
}

double weighted_anchor_objective(std::span<const WeightedAnchor> anchors, Point p) {
  double total = 0.0;
  for (const WeightedAnchor& a : anchors) total += a.factor * euclid_dist(p, a.pos);
  return total;
}

DescentResult weighted_fermat_point(std::span<const WeightedAnchor> anchors, Point start,
                                    const DescentOptions& opts) {
  if (anchors.size() < 2) {
    throw Error("weighted_fermat_point: need at least 2 anchors");
  }
  std::vector<Point> pts;
  pts.reserve(anchors.size());
  for (const auto& a : anchors) pts.push_back(a.pos);
  const double scale = std::max(bbox_diagonal(pts), 1e-30);
  const double anchor_snap = 1e-12 * scale;
  const double step_tol = opts.position_tolerance * scale;

  Point p = start;
  double best_obj = weighted_anchor_objective(anchors, p);
  Point best = p;
  if (opts.observer) opts.observer(p, best_obj);

  int iter = 0;
  for (; iter < opts.max_iterations; ++iter) {
    // Anchor-coincidence guard: test the anchor's optimality condition.
    int at_anchor = -1;
    for (size_t i = 0; i < anchors.size(); ++i) {
      if (euclid_dist(p, anchors[i].pos) <= anchor_snap) {
        at_anchor = static_cast<int>(i);
        break;
      }
    }
    if (at_anchor >= 0) {
      Point g{0.0, 0.0};
      for (size_t i = 0; i < anchors.size(); ++i) {
        if (static_cast<int>(i) == at_anchor) continue;
        const double d = euclid_dist(p, anchors[i].pos);
        if (d <= anchor_snap) continue;  // coincident anchors pull equally from all sides
        g = g + (anchors[i].factor / d) * (p - anchors[i].pos);
      }
      if (norm(g) <= anchors[at_anchor].factor + 1e-12) {
        best = anchors[at_anchor].pos;
        best_obj = weighted_anchor_objective(anchors, best);
        if (opts.observer) opts.observer(best, best_obj);
        return {best, best_obj, true, iter};
      }
      // Not optimal at the anchor: step off along the descent direction.
      p = p - (anchor_snap * 1e3 / norm(g)) * g;
    }

    double wsum = 0.0;
    Point num{0.0, 0.0};
    for (const WeightedAnchor& a : anchors) {
      const double d = euclid_dist(p, a.pos);
      const double w = a.factor / std::max(d, anchor_snap * 1e-3);
      wsum += w;
      num = num + w * a.pos;
    }
    const Point next{num.x / wsum, num.y / wsum};
    const double step = euclid_dist(next, p);
    p = next;
    const double obj = weighted_anchor_objective(anchors, p);
    if (opts.observer) opts.observer(p, obj);
    // <= so that later, more converged iterates win objective ties (the
    // objective is quadratically flat around the minimizer).
    if (obj <= best_obj) {
      best_obj = obj;
      best = p;
    }
    if (step <= step_tol) {
      return {best, best_obj, true, iter + 1};
    }
  }
  return {best, best_obj, false, iter};
}

}  // namespace wsmt
