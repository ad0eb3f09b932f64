#pragma once

#include <vector>

#include "wsmt/tree.hpp"

namespace wsmt {

/// Spanning tree of the terminals minimizing the total connection cost
/// (Prim on the complete graph); edges may cross. Ties go to the candidate
/// whose new vertex comes earliest in the terminal order.
PlaneTree weighted_mst(const std::vector<WeightedVertex>& terminals);

/// Prim-style growth restricted to edges that do not cross the already
/// accepted ones (shared endpoints allowed). When the cheapest vertex has no
/// non-crossing connecting edge, candidate pairs are scanned in increasing
/// cost order; InfeasiblePlaneTreeError if none connects.
PlaneTree plane_weighted_mst(const std::vector<WeightedVertex>& terminals);
PlaneTree plane_weighted_mst(const std::vector<WeightedVertex>& terminals,
                             const std::vector<int>& insertion_order);

}  // namespace wsmt
