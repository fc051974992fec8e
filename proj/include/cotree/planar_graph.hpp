#pragma once

#include <optional>
#include <vector>

#include "cotree/core.hpp"

namespace cotree {

// Root vertices of the embedding: v1, v2 adjacent on the outer face, vn the
// other outer neighbour of v1. Reading the outer face orbit one sees
// (..., v2, v1, vn, ...).
struct Roots {
  Vertex v1 = -1;
  Vertex v2 = -1;
  Vertex vn = -1;
};

struct FaceSet {
  int count = 0;
  std::vector<FaceId> face_of;          // dart -> face on its LEFT
  std::vector<Dart> face_dart;          // face -> one dart of its orbit
  std::vector<int> face_size;           // face -> orbit length
};

// Combinatorial embedding as darts (half-edges). Dart 2e and 2e+1 form edge e;
// dart 2e points u -> v with u < v. rot_next[d] is the next dart clockwise
// around tail(d). Faces are orbits of face_next(d) = rot_next[twin(d)]; the
// face of a dart lies on its left.
struct PlanarGraph {
  int n = 0;
  std::vector<Vertex> dart_tail, dart_head;
  std::vector<Dart> rot_next, rot_prev;
  std::vector<Dart> vertex_dart;  // vertex -> some outgoing dart (-1 never: n >= 1 edges each)
  FaceSet faces;
  FaceId outer_face = -1;
  Roots roots;

  int num_darts() const { return (int)dart_tail.size(); }
  int num_edges() const { return num_darts() / 2; }
  Vertex tail(Dart d) const { return dart_tail[d]; }
  Vertex head(Dart d) const { return dart_head[d]; }
  Dart face_next(Dart d) const { return rot_next[twin(d)]; }
  Dart face_prev(Dart d) const { return twin(rot_prev[d]); }
  FaceId left_face(Dart d) const { return faces.face_of[d]; }
  FaceId right_face(Dart d) const { return faces.face_of[twin(d)]; }

  int degree(Vertex v) const;
  // Darts out of v in clockwise order starting at vertex_dart[v].
  std::vector<Dart> out_darts(Vertex v) const;
  // Face orbit of f starting at faces.face_dart[f].
  std::vector<Dart> face_orbit(FaceId f) const;
  // Vertices of the outer face in orbit order starting at v1 (so it reads
  // v1, vn, ..., v2).
  std::vector<Vertex> outer_cycle() const;
  // Dart v -> w, or -1 when vw is not an edge.
  Dart dart_between(Vertex v, Vertex w) const;
  // Rotation lists (clockwise neighbour sequences), the inverse of build_graph.
  std::vector<std::vector<Vertex>> rotation_system() const;
};

// Builds the embedding from clockwise rotation lists. outer_witness is any
// three consecutive vertices (a, b, c) of the outer face orbit, used to locate
// it among the traced faces. Validates symmetry, simplicity, Euler's formula
// and that the roots sit consecutively (v2, v1, vn) on the outer orbit.
PlanarGraph build_graph(const std::vector<std::vector<Vertex>>& rotations,
                        const std::vector<Vertex>& outer_witness, Roots roots);

// The dual embedding. Dart ids are shared with the primal graph: dual dart d
// runs left_face(d) -> right_face(d). Dual vertex f corresponds to primal face
// f, dual edge e to primal edge e. Dual rotations are reversed primal face
// orbits, which makes the dual clockwise again. faces of the dual graph are
// groups of darts sharing a primal head; dual outer face is the dual face
// around primal v1.
struct DualGraph {
  PlanarGraph graph;
  // dual face id -> primal vertex it surrounds
  std::vector<Vertex> face_vertex;
  // primal vertex -> dual face around it
  std::vector<FaceId> vertex_face;
};

DualGraph dual(const PlanarGraph& g);

// Brute-force 3-connectivity: removes each vertex pair and BFSes. O(n^2 m);
// throws TooLargeForBruteCheck when n > bound unless force is set. Requires
// n >= 4. Returns the separating pair when not 3-connected.
std::optional<std::pair<Vertex, Vertex>> find_separating_pair(const PlanarGraph& g,
                                                              int bound = 500,
                                                              bool force = false);
bool is_three_connected(const PlanarGraph& g, int bound = 500, bool force = false);

}  // namespace cotree
