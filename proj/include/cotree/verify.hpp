#pragma once

#include <functional>

#include "cotree/planar_graph.hpp"

namespace cotree {

// Report-style spanning tree check: edge count, connectivity, acyclicity.
ValidationReport verify_spanning_tree(const PlanarGraph& g, const std::vector<EdgeId>& edges);

struct DegreeProfile {
  int max_degree = 0;
  std::vector<int> histogram;  // histogram[d] = vertices of degree d
};
DegreeProfile degree_profile(const PlanarGraph& g, const std::vector<EdgeId>& edges);

// Streams every spanning tree (as a sorted edge-id set) through the visitor.
// Throws TooLarge when n exceeds the gate.
uint64_t enumerate_spanning_trees(const PlanarGraph& g,
                                  const std::function<void(const std::vector<EdgeId>&)>& visit,
                                  int gate = 12);

// Exact count via the Laplacian minor determinant (integer-preserving
// elimination over 128-bit intermediates).
uint64_t count_spanning_trees_matrix_tree(const PlanarGraph& g);

// Over all spanning trees, the (tree degree, co-tree degree) pair minimising
// max(d, d*) and then d + d*. Same size gate as enumeration.
struct DegreePair {
  int tree = 0;
  int cotree = 0;
};
DegreePair best_degree_pair(const PlanarGraph& g, int gate = 12);

}  // namespace cotree
