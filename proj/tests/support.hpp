#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "wsmt/geometry.hpp"
#include "wsmt/tree.hpp"

namespace testsupport {

using wsmt::Point;
using wsmt::WeightedVertex;

inline bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

// ---------------------------------------------------------------------------
// Independent oracle for (weighted) Fermat points: dense grid search over the
// padded anchor bounding box, refined by pattern search with shrinking steps.
// Deliberately avoids the reweighting iteration used by the implementation.
// ---------------------------------------------------------------------------

struct GridAnchor {
  Point pos;
  double factor = 1.0;
};

inline double grid_objective(const std::vector<GridAnchor>& anchors, Point p) {
  double total = 0.0;
  for (const auto& a : anchors) total += a.factor * std::hypot(p.x - a.pos.x, p.y - a.pos.y);
  return total;
}

inline Point grid_descent_minimizer(const std::vector<GridAnchor>& anchors) {
  double xmin = anchors[0].pos.x, xmax = xmin, ymin = anchors[0].pos.y, ymax = ymin;
  for (const auto& a : anchors) {
    xmin = std::min(xmin, a.pos.x);
    xmax = std::max(xmax, a.pos.x);
    ymin = std::min(ymin, a.pos.y);
    ymax = std::max(ymax, a.pos.y);
  }
  const double pad = 0.05 * std::max(xmax - xmin, ymax - ymin) + 1e-9;
  xmin -= pad;
  xmax += pad;
  ymin -= pad;
  ymax += pad;

  const int cells = 160;
  Point best{xmin, ymin};
  double best_val = grid_objective(anchors, best);
  for (int i = 0; i <= cells; ++i) {
    for (int j = 0; j <= cells; ++j) {
      const Point p{xmin + (xmax - xmin) * i / cells, ymin + (ymax - ymin) * j / cells};
      const double v = grid_objective(anchors, p);
      if (v < best_val) {
        best_val = v;
        best = p;
      }
    }
  }

  double step = std::max(xmax - xmin, ymax - ymin) / cells;
  while (step > 1e-12) {
    bool improved = false;
    const Point moves[4] = {{step, 0.0}, {-step, 0.0}, {0.0, step}, {0.0, -step}};
    for (const Point& d : moves) {
      const Point p{best.x + d.x, best.y + d.y};
      const double v = grid_objective(anchors, p);
      if (v < best_val) {
        best_val = v;
        best = p;
        improved = true;
      }
    }
    if (!improved) step *= 0.5;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Kruskal on Euclidean distances, used only to cross-check weighted_mst at
// unit weights.
// ---------------------------------------------------------------------------

inline double kruskal_euclidean_mst_length(const std::vector<WeightedVertex>& terminals) {
  const int n = static_cast<int>(terminals.size());
  struct Item {
    double d;
    int u, v;
  };
  std::vector<Item> items;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      items.push_back({wsmt::euclid_dist(terminals[u].pos, terminals[v].pos), u, v});
    }
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.d < b.d; });
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  double total = 0.0;
  int used = 0;
  for (const Item& it : items) {
    const int ru = find(it.u), rv = find(it.v);
    if (ru == rv) continue;
    parent[ru] = rv;
    total += it.d;
    if (++used == n - 1) break;
  }
  return total;
}

// ---------------------------------------------------------------------------
// The six-point orbit family: images of (1-2s, 0) under the symmetry group of
// the equilateral triangle with vertices (-1,0), (1,0), (0, sqrt3).
// ---------------------------------------------------------------------------

inline std::vector<WeightedVertex> hexagon_orbit(double s, double weight = 1.0) {
  const Point center{0.0, 1.0 / std::numbers::sqrt3};
  auto rot = [&](Point p) { return wsmt::rotate_around(p, center, 120.0); };
  auto refl = [](Point p) { return Point{-p.x, p.y}; };
  const Point z0{1.0 - 2.0 * s, 0.0};
  std::vector<Point> pts{z0, rot(z0), rot(rot(z0)), refl(z0), rot(refl(z0)), rot(rot(refl(z0)))};
  std::vector<WeightedVertex> out;
  for (size_t i = 0; i < pts.size(); ++i) {
    out.push_back({static_cast<int>(i), pts[i], weight, wsmt::VertexKind::Terminal});
  }
  return out;
}

// Fig. 4 rectangle: AB = CD = 2 horizontal, BC = AD = ell vertical,
// w(A) = w(D) = omega, w(B) = w(C) = 1, entered in the order A, B, C, D.
inline std::vector<WeightedVertex> rectangle_instance(double ell, double omega) {
  return {
      {0, {0.0, ell}, omega, wsmt::VertexKind::Terminal},  // A
      {1, {2.0, ell}, 1.0, wsmt::VertexKind::Terminal},    // B
      {2, {2.0, 0.0}, 1.0, wsmt::VertexKind::Terminal},    // C
      {3, {0.0, 0.0}, omega, wsmt::VertexKind::Terminal},  // D
  };
}

inline std::vector<WeightedVertex> random_terminals(int n, int wmin, int wmax,
                                                    std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  auto unit = [&]() { return static_cast<double>(gen() >> 11) * 0x1.0p-53; };
  std::vector<WeightedVertex> out;
  while (static_cast<int>(out.size()) < n) {
    const Point p{unit() * 100.0, unit() * 100.0};
    bool dup = false;
    for (const auto& t : out) dup |= t.pos == p;
    if (dup) continue;
    const int w = wmin + static_cast<int>(gen() % static_cast<std::uint64_t>(wmax - wmin + 1));
    out.push_back({static_cast<int>(out.size()), p, static_cast<double>(w),
                   wsmt::VertexKind::Terminal});
  }
  return out;
}

}  // namespace testsupport
