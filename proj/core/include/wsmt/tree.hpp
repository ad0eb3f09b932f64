#pragma once

#include <set>
#include <utility>
#include <vector>

#include "wsmt/geometry.hpp"

namespace wsmt {

using Edge = std::pair<int, int>;  // normalized: first < second

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

struct TreeMetrics {
  double weighted_length = 0.0;
  double euclidean_length = 0.0;
};

/// Vertex set plus undirected edge set; the central evolving structure.
/// Vertex ids are stable across mutations and never reused.
class PlaneTree {
 public:
  PlaneTree() = default;

  int add_vertex(Point pos, double weight, VertexKind kind);
  void add_vertex_with_id(int id, Point pos, double weight, VertexKind kind);

  bool contains(int id) const { return slot(id) >= 0; }
  const WeightedVertex& vertex(int id) const;
  WeightedVertex& vertex(int id);

  void add_edge(int a, int b);
  void remove_edge(int a, int b);
  bool has_edge(int a, int b) const { return edges_.count(make_edge(a, b)) > 0; }

  /// Removes a vertex that has no incident edges.
  void remove_isolated_vertex(int id);

  /// Reattaches every edge of `drop` to `keep` and removes `drop`.
  /// The pair need not be adjacent; an existing keep-drop edge just vanishes.
  void contract_into(int keep, int drop);

  std::vector<int> neighbors(int id) const;  // ascending ids
  int degree(int id) const;

  const std::vector<WeightedVertex>& vertices() const { return verts_; }
  std::vector<int> vertex_ids() const;
  const std::set<Edge>& edges() const { return edges_; }
  size_t vertex_count() const { return verts_.size(); }
  size_t edge_count() const { return edges_.size(); }

  int terminal_count() const;
  int steiner_count() const;

  /// Connected and acyclic over all vertices (|E| = |V| - 1 plus connectivity).
  bool is_tree() const;

  Segment edge_segment(const Edge& e) const;

 private:
  int slot(int id) const;

  std::vector<WeightedVertex> verts_;  // kept sorted by id
  std::set<Edge> edges_;
  int next_id_ = 0;
};

/// Sums connection costs (weighted) and Euclidean lengths over all edges.
TreeMetrics tree_metrics(const PlaneTree& tree);

/// Every edge pair for which segments_cross(.., shared_endpoint_ok=true)
/// holds; empty for a plane tree.
std::vector<std::pair<Edge, Edge>> crossing_edge_pairs(const PlaneTree& tree);

}  // namespace wsmt
