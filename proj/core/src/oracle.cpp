#include "wsmt/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "wsmt/wmst.hpp"

namespace wsmt {

namespace {

std::vector<Topology> spanning_trees(int n) {
  std::vector<Topology> out;
  if (n == 1) {
    out.push_back({1, 0, {}});
    return out;
  }
  // Decode every Prufer sequence of length n-2.
  const int len = n - 2;
  std::vector<int> seq(std::max(len, 0), 0);
  while (true) {
    std::vector<int> deg(n, 1);
    for (int a : seq) deg[a]++;
    std::vector<bool> used(n, false);
    std::vector<Edge> edges;
    for (int a : seq) {
      int leaf = -1;
      for (int i = 0; i < n; ++i) {
        if (!used[i] && deg[i] == 1) {
          leaf = i;
          break;
        }
      }
      edges.push_back(make_edge(leaf, a));
      used[leaf] = true;
      deg[leaf]--;
      deg[a]--;
    }
    int u = -1, v = -1;
    for (int i = 0; i < n; ++i) {
      if (!used[i] && deg[i] == 1) (u < 0 ? u : v) = i;
    }
    edges.push_back(make_edge(u, v));
    out.push_back({n, 0, std::move(edges)});

    int pos = len - 1;
    while (pos >= 0 && seq[pos] == n - 1) seq[pos--] = 0;
    if (pos < 0) break;
    seq[pos]++;
  }
  return out;
}

std::vector<Topology> full_topologies(int n) {
  std::vector<Topology> out;
  if (n < 3) return out;
  // Terminals 0..n-1, Steiner slots n..2n-3. Terminal t >= 3 enters by
  // splitting an existing edge with slot n + t - 2.
  Topology base{n, 1, {make_edge(0, n), make_edge(1, n), make_edge(2, n)}};
  std::vector<Topology> frontier{base};
  for (int t = 3; t < n; ++t) {
    const int slot = n + t - 2;
    std::vector<Topology> next;
    for (const Topology& topo : frontier) {
      for (size_t e = 0; e < topo.edges.size(); ++e) {
        Topology grown = topo;
        const Edge split = grown.edges[e];
        grown.edges.erase(grown.edges.begin() + e);
        grown.edges.push_back(make_edge(split.first, slot));
        grown.edges.push_back(make_edge(split.second, slot));
        grown.edges.push_back(make_edge(t, slot));
        grown.steiner_count++;
        next.push_back(std::move(grown));
      }
    }
    frontier = std::move(next);
  }
  for (Topology& topo : frontier) {
    std::sort(topo.edges.begin(), topo.edges.end());
    out.push_back(std::move(topo));
  }
  return out;
}

double uniform_unit(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

struct FlatTopology {
  int n = 0;
  int k = 0;
  std::vector<double> weight;            // n + k
  std::vector<Point> pos;                // n + k
  std::vector<std::vector<int>> adj;     // n + k
  const std::vector<Edge>* edges = nullptr;

  double weighted_length() const {
    double total = 0.0;
    for (const Edge& e : *edges) {
      total += connection_cost(weight[e.first], pos[e.first], weight[e.second], pos[e.second]);
    }
    return total;
  }
  double euclidean_length() const {
    double total = 0.0;
    for (const Edge& e : *edges) total += euclid_dist(pos[e.first], pos[e.second]);
    return total;
  }
};

}  // namespace

std::vector<Topology> enumerate_topologies(int terminal_count) {
  if (terminal_count < 1) throw Error("enumerate_topologies: need at least one terminal");
  if (terminal_count > kOracleTerminalCap) {
    throw CapExceededError("enumerate_topologies: terminal count exceeds the cap of 7");
  }
  std::vector<Topology> out = spanning_trees(terminal_count);
  std::vector<Topology> full = full_topologies(terminal_count);
  out.insert(out.end(), std::make_move_iterator(full.begin()),
             std::make_move_iterator(full.end()));
  return out;
}

OptimizedTopology optimize_topology(const Topology& topology,
                                    const std::vector<WeightedVertex>& terminals) {
  const int n = topology.terminal_count;
  const int k = topology.steiner_count;
  if (static_cast<int>(terminals.size()) != n) {
    throw Error("optimize_topology: terminal count mismatch");
  }

  FlatTopology flat;
  flat.n = n;
  flat.k = k;
  flat.edges = &topology.edges;
  flat.weight.assign(n + k, 0.0);
  flat.pos.assign(n + k, Point{});
  flat.adj.assign(n + k, {});
  for (int i = 0; i < n; ++i) {
    flat.weight[i] = terminals[i].weight;
    flat.pos[i] = terminals[i].pos;
  }
  for (const Edge& e : topology.edges) {
    flat.adj[e.first].push_back(e.second);
    flat.adj[e.second].push_back(e.first);
  }

  // Steiner weights: fixed point of w(S) = min over tree neighbors.
  for (int s = n; s < n + k; ++s) flat.weight[s] = std::numeric_limits<double>::infinity();
  for (int sweep = 0; sweep <= k + 1; ++sweep) {
    bool changed = false;
    for (int s = n; s < n + k; ++s) {
      double m = std::numeric_limits<double>::infinity();
      for (int nb : flat.adj[s]) m = std::min(m, flat.weight[nb]);
      if (m < flat.weight[s]) {
        flat.weight[s] = m;
        changed = true;
      }
    }
    if (!changed) break;
  }

  auto build_tree = [&](const FlatTopology& f) {
    PlaneTree tree;
    int max_id = -1;
    for (const auto& t : terminals) max_id = std::max(max_id, t.id);
    for (const auto& t : terminals) {
      tree.add_vertex_with_id(t.id, t.pos, t.weight, VertexKind::Terminal);
    }
    std::vector<int> slot_to_id(n + k);
    for (int i = 0; i < n; ++i) slot_to_id[i] = terminals[i].id;
    for (int s = n; s < n + k; ++s) {
      slot_to_id[s] = ++max_id;
      tree.add_vertex_with_id(slot_to_id[s], f.pos[s], f.weight[s], VertexKind::Steiner);
    }
    for (const Edge& e : topology.edges) {
      tree.add_edge(slot_to_id[e.first], slot_to_id[e.second]);
    }
    return tree;
  };

  if (k == 0) {
    OptimizedTopology result;
    result.tree = build_tree(flat);
    result.weighted_length = flat.weighted_length();
    result.euclidean_length = flat.euclidean_length();
    return result;
  }

  Point centroid{0.0, 0.0};
  double xmin = terminals[0].pos.x, xmax = xmin, ymin = terminals[0].pos.y, ymax = ymin;
  for (const auto& t : terminals) {
    centroid = centroid + t.pos;
    xmin = std::min(xmin, t.pos.x);
    xmax = std::max(xmax, t.pos.x);
    ymin = std::min(ymin, t.pos.y);
    ymax = std::max(ymax, t.pos.y);
  }
  centroid = (1.0 / n) * centroid;
  const double diag = std::max(std::hypot(xmax - xmin, ymax - ymin), 1e-12);

  FlatTopology best = flat;
  double best_len = std::numeric_limits<double>::infinity();
  bool best_converged = false;

  for (int start = 0; start < 3; ++start) {
    FlatTopology work = flat;
    std::mt19937_64 gen(0x5eed0000u + start);
    for (int s = n; s < n + k; ++s) {
      if (start == 0) {
        // Centroid with a tiny per-slot spread; exact coincidence is a
        // singular point of the reweighting iteration.
        const double phi = 2.399963229728653 * (s - n + 1);  // golden angle
        work.pos[s] = centroid + (1e-3 * diag) * Point{std::cos(phi), std::sin(phi)};
      } else {
        work.pos[s] = centroid + Point{(uniform_unit(gen) - 0.5) * 0.4 * diag,
                                       (uniform_unit(gen) - 0.5) * 0.4 * diag};
      }
    }

    DescentOptions step_opts;
    step_opts.max_iterations = 1;
    double prev = work.weighted_length();
    bool converged = false;
    const int sweep_cap = 5000;
    for (int sweep = 0; sweep < sweep_cap; ++sweep) {
      for (int s = n; s < n + k; ++s) {
        std::vector<WeightedAnchor> anchors;
        anchors.reserve(flat.adj[s].size());
        for (int nb : flat.adj[s]) {
          anchors.push_back({work.pos[nb], 0.5 * (work.weight[s] + work.weight[nb])});
        }
        work.pos[s] = weighted_fermat_point(anchors, work.pos[s], step_opts).point;
      }
      const double now = work.weighted_length();
      if (prev - now <= 1e-13 * std::max(now, 1e-300)) {
        converged = true;
        break;
      }
      prev = now;
    }
    // Polish with full per-vertex solves until the junctions stop moving.
    DescentOptions polish_opts;
    polish_opts.max_iterations = 400;
    for (int round = 0; round < 30; ++round) {
      double moved = 0.0;
      for (int s = n; s < n + k; ++s) {
        std::vector<WeightedAnchor> anchors;
        for (int nb : flat.adj[s]) {
          anchors.push_back({work.pos[nb], 0.5 * (work.weight[s] + work.weight[nb])});
        }
        const Point next = weighted_fermat_point(anchors, work.pos[s], polish_opts).point;
        moved = std::max(moved, euclid_dist(next, work.pos[s]));
        work.pos[s] = next;
      }
      if (moved <= 1e-12 * diag) break;
    }
    const double len = work.weighted_length();
    if (len < best_len) {
      best_len = len;
      best = work;
      best_converged = converged;
    }
  }

  OptimizedTopology result;
  result.tree = build_tree(best);
  result.weighted_length = best_len;
  result.euclidean_length = best.euclidean_length();
  result.converged = best_converged;
  return result;
}

OracleResult oracle_wsmt(const std::vector<WeightedVertex>& terminals) {
  const int n = static_cast<int>(terminals.size());
  if (n > kOracleTerminalCap) {
    throw CapExceededError("oracle_wsmt: terminal count exceeds the cap of 7");
  }
  const std::vector<Topology> topologies = enumerate_topologies(n);
  OracleResult result;
  double best = std::numeric_limits<double>::infinity();
  for (const Topology& topo : topologies) {
    OptimizedTopology opt = optimize_topology(topo, terminals);
    ++result.topologies_examined;
    if (opt.weighted_length < best) {
      best = opt.weighted_length;
      result.best_tree = std::move(opt.tree);
      result.best_weighted_length = opt.weighted_length;
      result.best_euclidean_length = opt.euclidean_length;
    }
  }
  return result;
}

}  // namespace wsmt
