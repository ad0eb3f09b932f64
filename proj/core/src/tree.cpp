#include "wsmt/tree.hpp"

#include <algorithm>
#include <queue>

namespace wsmt {

int PlaneTree::slot(int id) const {
  auto it = std::lower_bound(verts_.begin(), verts_.end(), id,
                             [](const WeightedVertex& v, int key) { return v.id < key; });
  if (it == verts_.end() || it->id != id) return -1;
  return static_cast<int>(it - verts_.begin());
}

int PlaneTree::add_vertex(Point pos, double weight, VertexKind kind) {
  const int id = next_id_++;
  verts_.push_back({id, pos, weight, kind});
  return id;
}

void PlaneTree::add_vertex_with_id(int id, Point pos, double weight, VertexKind kind) {
  if (contains(id)) throw Error("PlaneTree: duplicate vertex id");
  verts_.push_back({id, pos, weight, kind});
  std::sort(verts_.begin(), verts_.end(),
            [](const WeightedVertex& a, const WeightedVertex& b) { return a.id < b.id; });
  next_id_ = std::max(next_id_, id + 1);
}

const WeightedVertex& PlaneTree::vertex(int id) const {
  const int s = slot(id);
  if (s < 0) throw Error("PlaneTree: unknown vertex id");
  return verts_[s];
}

WeightedVertex& PlaneTree::vertex(int id) {
  const int s = slot(id);
  if (s < 0) throw Error("PlaneTree: unknown vertex id");
  return verts_[s];
}

void PlaneTree::add_edge(int a, int b) {
  if (a == b) throw Error("PlaneTree: self-loop");
  if (!contains(a) || !contains(b)) throw Error("PlaneTree: edge endpoint missing");
  edges_.insert(make_edge(a, b));
}

void PlaneTree::remove_edge(int a, int b) { edges_.erase(make_edge(a, b)); }

void PlaneTree::remove_isolated_vertex(int id) {
  if (degree(id) != 0) throw Error("PlaneTree: vertex still has edges");
  const int s = slot(id);
  if (s < 0) throw Error("PlaneTree: unknown vertex id");
  verts_.erase(verts_.begin() + s);
}

void PlaneTree::contract_into(int keep, int drop) {
  if (keep == drop) throw Error("PlaneTree: contracting a vertex into itself");
  std::vector<int> nbrs = neighbors(drop);
  for (int n : nbrs) {
    remove_edge(drop, n);
    if (n != keep && !has_edge(keep, n)) add_edge(keep, n);
  }
  remove_isolated_vertex(drop);
}

std::vector<int> PlaneTree::neighbors(int id) const {
  std::vector<int> out;
  for (const Edge& e : edges_) {
    if (e.first == id) out.push_back(e.second);
    if (e.second == id) out.push_back(e.first);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int PlaneTree::degree(int id) const {
  int d = 0;
  for (const Edge& e : edges_) d += (e.first == id) + (e.second == id);
  return d;
}

std::vector<int> PlaneTree::vertex_ids() const {
  std::vector<int> ids;
  ids.reserve(verts_.size());
  for (const auto& v : verts_) ids.push_back(v.id);
  return ids;
}

int PlaneTree::terminal_count() const {
  int n = 0;
  for (const auto& v : verts_) n += v.kind == VertexKind::Terminal;
  return n;
}

int PlaneTree::steiner_count() const {
  return static_cast<int>(verts_.size()) - terminal_count();
}

bool PlaneTree::is_tree() const {
  if (verts_.empty()) return false;
  if (edges_.size() != verts_.size() - 1) return false;
  std::set<int> seen;
  std::queue<int> q;
  q.push(verts_.front().id);
  seen.insert(verts_.front().id);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int n : neighbors(v)) {
      if (seen.insert(n).second) q.push(n);
    }
  }
  return seen.size() == verts_.size();
}

Segment PlaneTree::edge_segment(const Edge& e) const {
  return {vertex(e.first).pos, vertex(e.second).pos};
}

TreeMetrics tree_metrics(const PlaneTree& tree) {
  TreeMetrics m;
  for (const Edge& e : tree.edges()) {
    const auto& u = tree.vertex(e.first);
    const auto& v = tree.vertex(e.second);
    m.weighted_length += connection_cost(u, v);
    m.euclidean_length += euclid_dist(u.pos, v.pos);
  }
  return m;
}

std::vector<std::pair<Edge, Edge>> crossing_edge_pairs(const PlaneTree& tree) {
  std::vector<std::pair<Edge, Edge>> out;
  const auto& edges = tree.edges();
  for (auto it = edges.begin(); it != edges.end(); ++it) {
    for (auto jt = std::next(it); jt != edges.end(); ++jt) {
      if (segments_cross(tree.edge_segment(*it), tree.edge_segment(*jt), true)) {
        out.emplace_back(*it, *jt);
      }
    }
  }
  return out;
}

}  // namespace wsmt
