#pragma once

#include <vector>

#include "wsmt/tree.hpp"

namespace wsmt {

/// Abstract Steiner topology over terminal slots 0..n-1 and Steiner slots
/// n..n+k-1. Steiner slots have degree 3.
struct Topology {
  int terminal_count = 0;
  int steiner_count = 0;
  std::vector<Edge> edges;
};

struct OracleResult {
  PlaneTree best_tree;
  double best_weighted_length = 0.0;
  double best_euclidean_length = 0.0;
  long topologies_examined = 0;
};

inline constexpr int kOracleTerminalCap = 7;

/// Every labeled spanning tree (k = 0, via Prufer sequences) plus every full
/// Steiner topology (k = n-2, via recursive edge splitting). Intermediate
/// Steiner counts are reached by letting Steiner points collapse during
/// optimization. Throws CapExceededError for n > 7.
std::vector<Topology> enumerate_topologies(int terminal_count);

struct OptimizedTopology {
  PlaneTree tree;
  double weighted_length = 0.0;
  double euclidean_length = 0.0;
  bool converged = true;
};

/// Fixes Steiner weights at the fixed point of w(S) = min over tree
/// neighbors, then minimizes the weighted total length over Steiner positions
/// by cyclic reweighted updates with three deterministic starts.
OptimizedTopology optimize_topology(const Topology& topology,
                                    const std::vector<WeightedVertex>& terminals);

/// Exact (weighted) Steiner minimal tree for up to 7 terminals by brute
/// force over all enumerated topologies.
OracleResult oracle_wsmt(const std::vector<WeightedVertex>& terminals);

}  // namespace wsmt
