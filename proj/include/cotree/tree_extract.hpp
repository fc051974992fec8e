#pragma once

#include "cotree/canonical_order.hpp"
#include "cotree/dual_order.hpp"
#include "cotree/planar_graph.hpp"

namespace cotree {

// A spanning tree of the primal graph together with its co-tree (the duals of
// the non-tree edges, identified by the shared edge ids). max_deg_cotree is
// the maximum degree the co-tree attains in the dual graph.
struct SpanningTreePair {
  std::vector<EdgeId> tree_edges;
  std::vector<EdgeId> cotree_edges;
  int max_deg_tree = 0;
  int max_deg_cotree = 0;
};

// Edge subgraph H: rule_tags[e] is a bitmask over H1..H4 (0 = not in H).
struct HSubgraph {
  static constexpr uint8_t H1 = 1, H2 = 2, H3 = 4, H4 = 8;
  std::vector<EdgeId> edges;
  std::vector<uint8_t> rule_tags;
};

// Closed walk around a spanning tree; verts has 2(n-1)+1 entries and starts
// and ends at v1. max_face_visits counts maximal contiguous (cyclic) runs of
// walk steps along any one face boundary.
struct Walk {
  std::vector<Vertex> verts;
  int max_vertex_visits = 0;
  int max_face_visits = 0;
};

// Everything derived from one canonical ordering of g and of its dual.
struct Pipeline {
  CanonicalOrdering co;
  VertexEnumeration en;
  EdgeAnnotation ann;
  DualGraph dg;
  DualCanonicalOrdering dco;
  VertexEnumeration dual_en;
  EdgeAnnotation dual_ann;
  HSubgraph h, dual_h;
  std::vector<EdgeId> h0;
};

Pipeline run_pipeline(const PlanarGraph& g);

// Parent-edge tree: every vertex except v1 contributes its parent edge.
// Spans with maximum degree 3.
SpanningTreePair barnette_tree(const PlanarGraph& g, const EdgeAnnotation& ann);

// Re-roots an augmentation of g at a new edge {u, w} across their unique
// common face, extracts the parent-edge tree there and maps it back. In the
// result u and w have degree 1 and the other vertices of that face degree
// at most 2.
SpanningTreePair constrained_barnette(const PlanarGraph& g, Vertex u, Vertex w,
                                      int three_conn_gate = 500);

HSubgraph h_edges(const PlanarGraph& g, const EdgeAnnotation& ann);

// H0 = edges of H whose dual is not in the dual H. Always a forest.
std::vector<EdgeId> h_zero(const PlanarGraph& g, const HSubgraph& h, const HSubgraph& dual_h);

// Minimum spanning tree of H under weights 0 on H0 and 1 elsewhere, grown from
// v1 with edge-id tie-breaking. Contains all of H0; its co-tree is a spanning
// tree of the dual with maximum degree 5.
SpanningTreePair five_tree_from(const PlanarGraph& g, const Pipeline& p);
SpanningTreePair five_tree(const PlanarGraph& g);

// Complement edge ids plus degree stats; input must be a spanning tree.
std::vector<EdgeId> co_tree(const PlanarGraph& g, const std::vector<EdgeId>& tree_edges);

// Closed clockwise Euler tour around the tree, starting at v1. Requires tree
// and co-tree maximum degree at most 5.
Walk tree_to_walk(const PlanarGraph& g, const std::vector<EdgeId>& tree_edges);

}  // namespace cotree
