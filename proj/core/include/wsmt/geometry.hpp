#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "wsmt/errors.hpp"

namespace wsmt {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
inline bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }

inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }

inline Point midpoint(Point a, Point b) { return {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)}; }

/// Rotate `p` around `center` by `degrees` (positive = counterclockwise).
Point rotate_around(Point p, Point center, double degrees);

double euclid_dist(Point p, Point q);

enum class VertexKind { Terminal, Steiner };

struct WeightedVertex {
  int id = -1;
  Point pos;
  double weight = 1.0;
  VertexKind kind = VertexKind::Terminal;
};

/// Connection cost between two weighted vertices: (w_u + w_v)/2 * |u - v|.
double connection_cost(const WeightedVertex& u, const WeightedVertex& v);
double connection_cost(double wu, Point u, double wv, Point v);

struct Segment {
  Point a;
  Point b;
};

/// Interior angle at `apex` between rays to `a` and `b`, in degrees [0, 180].
/// Throws DegenerateAngleError when a or b coincides with the apex.
double angle_at(Point apex, Point a, Point b);

/// Whether two closed segments share at least one point. With
/// shared_endpoint_ok, contact confined to a common endpoint does not count.
bool segments_cross(const Segment& s1, const Segment& s2, bool shared_endpoint_ok);

struct FermatResult {
  Point point;
  bool inherent = false;
  std::optional<int> inherent_vertex;  // 0, 1, 2 for a, b, c
};

/// Fermat-Torricelli point of a triangle. Returns the corner (inherent) when
/// its angle is >= 120 degrees, otherwise the interior point where the three
/// connecting segments meet pairwise at 120 degrees.
FermatResult fermat_point(Point a, Point b, Point c);

struct WeightedAnchor {
  Point pos;
  double factor = 1.0;
};

struct DescentOptions {
  int max_iterations = 1000;
  // Stop when the iterate moves less than this fraction of the anchor
  // bounding-box diagonal.
  double position_tolerance = 1e-13;
  // Called once per iterate with (point, objective value).
  std::function<void(const Point&, double)> observer;
};

struct DescentResult {
  Point point;
  double objective = 0.0;
  bool converged = true;
  int iterations = 0;
};

/// Local minimizer of sum_i factor_i * |P - anchor_i| by iteratively
/// reweighted averaging from `start`. The objective never exceeds its value
/// at `start`. Requires >= 2 anchors with positive factors.
DescentResult weighted_fermat_point(std::span<const WeightedAnchor> anchors, Point start,
                                    const DescentOptions& opts = {});

double weighted_anchor_objective(std::span<const WeightedAnchor> anchors, Point p);

}  // namespace wsmt
