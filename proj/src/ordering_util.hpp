#pragma once

#include "cotree/canonical_order.hpp"
#include "cotree/planar_graph.hpp"

namespace cotree {
namespace detail {

// Vertex -> 0-based group index; throws InternalInvariantBroken unless the
// groups partition the vertex set.
std::vector<int> group_index_of(const PlanarGraph& g, const CanonicalOrdering& co);

// Clockwise block of the darts from z towards earlier groups. For vn the
// block is anchored so that it ends with the dart to v1; elsewhere it starts
// right after the gap of later neighbours. Empty when the earlier darts are
// not contiguous or fewer than two.
std::vector<Dart> incoming_block(const PlanarGraph& g, const std::vector<int>& gi, Vertex z);

// The single earlier neighbour of a chain end; -1 unless there is exactly one.
Vertex chain_attach(const PlanarGraph& g, const std::vector<int>& gi, Vertex z);

}  // namespace detail
}  // namespace cotree
