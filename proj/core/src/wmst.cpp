#include "wsmt/wmst.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace wsmt {

namespace {

void validate_terminals(const std::vector<WeightedVertex>& terminals) {
  if (terminals.empty()) throw Error("terminal set must not be empty");
  std::map<std::pair<double, double>, int> seen;
  std::set<int> ids;
  for (size_t i = 0; i < terminals.size(); ++i) {
    const auto& t = terminals[i];
    if (!(t.weight > 0.0)) throw WeightError("terminal weight must be positive", -1);
    if (!std::isfinite(t.pos.x) || !std::isfinite(t.pos.y)) {
      throw Error("terminal coordinates must be finite");
    }
    if (!ids.insert(t.id).second) throw Error("terminal ids must be unique");
    auto [it, inserted] = seen.insert({{t.pos.x, t.pos.y}, static_cast<int>(i)});
    if (!inserted) {
      throw DuplicateTerminalError("duplicate terminal position");
    }
  }
}

PlaneTree tree_with_vertices(const std::vector<WeightedVertex>& terminals) {
  PlaneTree tree;
  for (const auto& t : terminals) {
    tree.add_vertex_with_id(t.id, t.pos, t.weight, VertexKind::Terminal);
  }
  return tree;
}

std::vector<int> rank_of_ids(const std::vector<WeightedVertex>& terminals,
                             const std::vector<int>& insertion_order) {
  std::map<int, int> rank;
  for (size_t i = 0; i < insertion_order.size(); ++i) rank[insertion_order[i]] = static_cast<int>(i);
  std::vector<int> out(terminals.size());
  for (size_t i = 0; i < terminals.size(); ++i) {
    auto it = rank.find(terminals[i].id);
    if (it == rank.end()) throw Error("insertion_order must cover every terminal id");
    out[i] = it->second;
  }
  return out;
}

}  // namespace

PlaneTree weighted_mst(const std::vector<WeightedVertex>& terminals) {
  validate_terminals(terminals);
  PlaneTree tree = tree_with_vertices(terminals);
  const size_t n = terminals.size();
  if (n == 1) return tree;

  // Prim with deterministic tie-breaking: smaller cost first, then the new
  // vertex earliest in input order, then the tree endpoint earliest.
  std::vector<bool> in_tree(n, false);
  std::vector<double> best_cost(n, std::numeric_limits<double>::infinity());
  std::vector<int> best_from(n, -1);
  in_tree[0] = true;
  for (size_t v = 1; v < n; ++v) {
    best_cost[v] = connection_cost(terminals[0], terminals[v]);
    best_from[v] = 0;
  }
  for (size_t added = 1; added < n; ++added) {
    int pick = -1;
    for (size_t v = 0; v < n; ++v) {
      if (in_tree[v]) continue;
      if (pick < 0 || best_cost[v] < best_cost[pick]) pick = static_cast<int>(v);
    }
    tree.add_edge(terminals[best_from[pick]].id, terminals[pick].id);
    in_tree[pick] = true;
    for (size_t v = 0; v < n; ++v) {
      if (in_tree[v]) continue;
      const double c = connection_cost(terminals[pick], terminals[v]);
      if (c < best_cost[v] || (c == best_cost[v] && pick < best_from[v])) {
        best_cost[v] = c;
        best_from[v] = pick;
      }
    }
  }
  return tree;
}

PlaneTree plane_weighted_mst(const std::vector<WeightedVertex>& terminals) {
  std::vector<int> order;
  order.reserve(terminals.size());
  for (const auto& t : terminals) order.push_back(t.id);
  return plane_weighted_mst(terminals, order);
}

PlaneTree plane_weighted_mst(const std::vector<WeightedVertex>& terminals,
                             const std::vector<int>& insertion_order) {
  validate_terminals(terminals);
  PlaneTree tree = tree_with_vertices(terminals);
  const size_t n = terminals.size();
  if (n == 1) return tree;
  const std::vector<int> rank = rank_of_ids(terminals, insertion_order);

  struct Candidate {
    double cost;
    int rank_new;
    int rank_tree;
    int idx_new;
    int idx_tree;
  };

  std::vector<bool> in_tree(n, false);
  size_t start = 0;
  for (size_t v = 1; v < n; ++v) {
    if (rank[v] < rank[start]) start = v;
  }
  in_tree[start] = true;
  std::vector<Edge> accepted;

  for (size_t added = 1; added < n; ++added) {
    std::vector<Candidate> cands;
    for (size_t u = 0; u < n; ++u) {
      if (!in_tree[u]) continue;
      for (size_t v = 0; v < n; ++v) {
        if (in_tree[v]) continue;
        cands.push_back({connection_cost(terminals[u], terminals[v]), rank[v], rank[u],
                         static_cast<int>(v), static_cast<int>(u)});
      }
    }
    std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
      if (a.cost != b.cost) return a.cost < b.cost;
      if (a.rank_new != b.rank_new) return a.rank_new < b.rank_new;
      return a.rank_tree < b.rank_tree;
    });
    bool placed = false;
    for (const Candidate& c : cands) {
      const Segment seg{terminals[c.idx_tree].pos, terminals[c.idx_new].pos};
      bool crosses = false;
      for (const Edge& e : accepted) {
        if (segments_cross(seg, tree.edge_segment(e), true)) {
          crosses = true;
          break;
        }
      }
      if (crosses) continue;
      tree.add_edge(terminals[c.idx_tree].id, terminals[c.idx_new].id);
      accepted.push_back(make_edge(terminals[c.idx_tree].id, terminals[c.idx_new].id));
      in_tree[c.idx_new] = true;
      placed = true;
      break;
    }
    if (!placed) {
      throw InfeasiblePlaneTreeError("no crossing-free edge connects a remaining vertex");
    }
  }
  return tree;
}

}  // namespace wsmt
