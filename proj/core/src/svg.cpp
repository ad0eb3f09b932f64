#include "wsmt/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

namespace wsmt {

namespace {

struct Mapper {
  double xmin = 0.0, ymin = 0.0, scale = 1.0, canvas = 800.0, margin = 40.0;

  static Mapper fit(const std::vector<Point>& pts, double canvas) {
    Mapper m;
    m.canvas = canvas;
    if (pts.empty()) return m;
    double xmin = pts[0].x, xmax = pts[0].x, ymin = pts[0].y, ymax = pts[0].y;
    for (const Point& p : pts) {
      xmin = std::min(xmin, p.x);
      xmax = std::max(xmax, p.x);
      ymin = std::min(ymin, p.y);
      ymax = std::max(ymax, p.y);
    }
    const double span = std::max({xmax - xmin, ymax - ymin, 1e-9});
    m.xmin = xmin;
    m.ymin = ymin;
    m.scale = (canvas - 2.0 * m.margin) / span;
    return m;
  }

  Point to_canvas(Point p) const {
    // SVG y grows downward.
    return {margin + (p.x - xmin) * scale, canvas - margin - (p.y - ymin) * scale};
  }
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

void emit_line(std::string& out, const Mapper& m, Point a, Point b, const std::string& color,
               double width) {
  const Point ca = m.to_canvas(a), cb = m.to_canvas(b);
  out += "<line x1=\"" + fmt(ca.x) + "\" y1=\"" + fmt(ca.y) + "\" x2=\"" + fmt(cb.x) +
         "\" y2=\"" + fmt(cb.y) + "\" stroke=\"" + color + "\" stroke-width=\"" + fmt(width) +
         "\"/>\n";
}

void emit_tree_edges(std::string& out, const Mapper& m, const PlaneTree& tree,
                     const std::string& color, double width) {
  for (const Edge& e : tree.edges()) {
    emit_line(out, m, tree.vertex(e.first).pos, tree.vertex(e.second).pos, color, width);
  }
}

void emit_vertices(std::string& out, const Mapper& m, const PlaneTree& tree) {
  for (const auto& v : tree.vertices()) {
    const Point c = m.to_canvas(v.pos);
    if (v.kind == VertexKind::Terminal) {
      out += "<circle cx=\"" + fmt(c.x) + "\" cy=\"" + fmt(c.y) +
             "\" r=\"5.000000\" fill=\"#1f4e79\"/>\n";
      char label[96];
      std::snprintf(label, sizeof(label), "%d (w=%g)", v.id, v.weight);
      out += "<text x=\"" + fmt(c.x + 7.0) + "\" y=\"" + fmt(c.y - 7.0) +
             "\" font-size=\"12\" font-family=\"sans-serif\">" + label + "</text>\n";
    } else {
      out += "<circle cx=\"" + fmt(c.x) + "\" cy=\"" + fmt(c.y) +
             "\" r=\"3.000000\" fill=\"#c1440e\"/>\n";
    }
  }
}

std::string document(double canvas, const std::string& body) {
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt(canvas) +
         "\" height=\"" + fmt(canvas) + "\" viewBox=\"0 0 " + fmt(canvas) + " " + fmt(canvas) +
         "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += body;
  out += "</svg>\n";
  return out;
}

std::vector<Point> gather_points(const PlaneTree& tree) {
  std::vector<Point> pts;
  for (const auto& v : tree.vertices()) pts.push_back(v.pos);
  return pts;
}

}  // namespace

std::string render_svg(const PlaneTree& tree, const RenderSpec& spec) {
  const Mapper m = Mapper::fit(gather_points(tree), spec.canvas_size);
  std::string body;
  emit_tree_edges(body, m, tree, spec.final_color, 2.0);
  emit_vertices(body, m, tree);
  return document(spec.canvas_size, body);
}

std::string render_svg(const PlaneTree& initial, const SolveResult& result,
                       const RenderSpec& spec) {
  std::vector<Point> pts = gather_points(initial);
  const std::vector<Point> final_pts = gather_points(result.tree);
  pts.insert(pts.end(), final_pts.begin(), final_pts.end());
  const Mapper m = Mapper::fit(pts, spec.canvas_size);

  const bool overlay = spec.phases.count(RenderPhase::Overlay) > 0;
  std::string body;
  if (overlay || spec.phases.count(RenderPhase::WMST) ||
      spec.phases.count(RenderPhase::PlaneWMST)) {
    emit_tree_edges(body, m, initial, spec.initial_color, 1.5);
  }
  if (overlay || spec.phases.count(RenderPhase::Slide) || spec.phases.count(RenderPhase::Detach)) {
    // Edges replaced along the way, in the figure convention.
    std::map<Edge, Segment> replaced;
    for (const TraceEvent& ev : result.trace) {
      if (ev.kind != EventKind::SlideInherent && ev.kind != EventKind::Detach) continue;
      if (!spec.phases.count(ev.kind == EventKind::SlideInherent ? RenderPhase::Slide
                                                                 : RenderPhase::Detach) &&
          !overlay) {
        continue;
      }
      for (const Edge& e : ev.removed_edges) {
        if (initial.contains(e.first) && initial.contains(e.second)) {
          replaced[e] = {initial.vertex(e.first).pos, initial.vertex(e.second).pos};
        }
      }
    }
    for (const auto& [edge, seg] : replaced) {
      emit_line(body, m, seg.a, seg.b, spec.replaced_color, 1.5);
    }
  }
  if (overlay || spec.phases.count(RenderPhase::Final)) {
    emit_tree_edges(body, m, result.tree, spec.final_color, 2.0);
    emit_vertices(body, m, result.tree);
  }
  return document(spec.canvas_size, body);
}

}  // namespace wsmt
