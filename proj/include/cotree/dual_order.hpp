#pragma once

#include "cotree/canonical_order.hpp"
#include "cotree/planar_graph.hpp"

namespace cotree {

// Canonical ordering of the dual graph read off a primal ordering. Group ids
// are dual vertex ids (face ids of the primal graph). primal_group[j] is the
// primal group index k (1-based) whose removal step induced dual group j+1;
// it is 0 for the base group {f1, f2}.
struct DualCanonicalOrdering {
  CanonicalOrdering ordering;
  std::vector<int> primal_group;
};

DualCanonicalOrdering dual_canonical_ordering(const PlanarGraph& g, const CanonicalOrdering& co,
                                              const DualGraph& dg);

// The four correspondence rules between primal and dual annotations:
// intra edges dualise to S-edges and vice versa, SW-edges dualise to SE-edges
// directed left-to-right, SE-edges to SW-edges directed right-to-left.
ValidationReport verify_label_correspondence(const PlanarGraph& g, const EdgeAnnotation& ann,
                                             const DualGraph& dg, const EdgeAnnotation& dual_ann);

}  // namespace cotree
