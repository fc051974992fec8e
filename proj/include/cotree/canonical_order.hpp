#pragma once

#include "cotree/planar_graph.hpp"

namespace cotree {

enum class GroupKind { Chain, Singleton };

// Ordered partition V_1..V_K of the vertices. groups[0] = {v1, v2} and
// groups.back() = {vn}. Chain groups are listed in clockwise order along the
// outer face of the prefix graph they complete. A group of size one always has
// kind Singleton, even when it is removed through the degree-two path.
struct CanonicalOrdering {
  std::vector<std::vector<Vertex>> groups;
  std::vector<GroupKind> kinds;
};

// idx maps vertices to 1..n (idx[v1] = 1, idx[v2] = 2, idx[vn] = n);
// by_idx is the inverse with by_idx[0] = -1.
struct VertexEnumeration {
  std::vector<int> idx;
  std::vector<Vertex> by_idx;
};

enum class Label { None, S, SW, W, NW, N, NE, E, SE };
const char* label_name(Label l);

// Per-edge directions and per-dart labels. dir[e] is the dart the edge is
// directed along (towards the larger index, except {v1,vn} which runs
// vn -> v1). label[d] is the label of edge_of(d) at tail(d). parent[v] is the
// parent edge of v, -1 for v1. first_out/last_out bound the clockwise interval
// of outgoing darts per vertex; nnw is the last outgoing NW dart in that
// interval, nne the first outgoing NE dart, north the N dart (-1 when absent).
struct EdgeAnnotation {
  std::vector<Dart> dir;
  std::vector<Label> label;
  std::vector<EdgeId> parent;
  std::vector<Dart> first_out, last_out, nnw, nne, north;
  bool has_labels = false;
};

CanonicalOrdering compute_canonical_ordering(const PlanarGraph& g);

// Definition-level checker. Structural checks always run; for n <= brute_gate
// every prefix additionally gets a brute-force 2-connectivity test and an
// outer-face retrace on the induced embedding.
ValidationReport validate_canonical_ordering(const PlanarGraph& g, const CanonicalOrdering& co,
                                             int brute_gate = 500);

VertexEnumeration enumerate_vertices(const PlanarGraph& g, const CanonicalOrdering& co);
EdgeAnnotation orient_edges(const PlanarGraph& g, const VertexEnumeration& en);
EdgeAnnotation label_edges(const PlanarGraph& g, const CanonicalOrdering& co,
                           const VertexEnumeration& en);

// Every face boundary must fall into exactly two directed arcs, except the two
// faces at the {v1,vn} edge which are directed cycles.
ValidationReport check_face_orientation(const PlanarGraph& g, const EdgeAnnotation& ann);

// Label grammar, direction rules, in/out contiguity, parent rules.
ValidationReport check_annotation(const PlanarGraph& g, const VertexEnumeration& en,
                                  const EdgeAnnotation& ann);

}  // namespace cotree
