#include "cotree/planar_graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace cotree {

const char* err_name(Err e) {
  switch (e) {
    case Err::NonSymmetricAdjacency: return "NonSymmetricAdjacency";
    case Err::EulerViolation: return "EulerViolation";
    case Err::OuterFaceNotFound: return "OuterFaceNotFound";
    case Err::BadRoots: return "BadRoots";
    case Err::ParallelOrLoopEdge: return "ParallelOrLoopEdge";
    case Err::TooLargeForBruteCheck: return "TooLargeForBruteCheck";
    case Err::NotThreeConnected: return "NotThreeConnected";
    case Err::AugmentationNotThreeConnected: return "AugmentationNotThreeConnected";
    case Err::NotASpanningTree: return "NotASpanningTree";
    case Err::PreconditionDegree: return "PreconditionDegree";
    case Err::InternalInvariantBroken: return "InternalInvariantBroken";
    case Err::TooLarge: return "TooLarge";
    case Err::BadParams: return "BadParams";
    case Err::BadInput: return "BadInput";
  }
  return "Unknown";
}

int PlanarGraph::degree(Vertex v) const {
  int deg = 0;
  Dart d0 = vertex_dart[v];
  Dart d = d0;
  do {
    ++deg;
    d = rot_next[d];
  } while (d != d0);
  return deg;
}

std::vector<Dart> PlanarGraph::out_darts(Vertex v) const {
  std::vector<Dart> out;
  Dart d0 = vertex_dart[v];
  Dart d = d0;
  do {
    out.push_back(d);
    d = rot_next[d];
  } while (d != d0);
  return out;
}

std::vector<Dart> PlanarGraph::face_orbit(FaceId f) const {
  std::vector<Dart> orbit;
  Dart d0 = faces.face_dart[f];
  Dart d = d0;
  do {
    orbit.push_back(d);
    d = face_next(d);
  } while (d != d0);
  return orbit;
}

std::vector<Vertex> PlanarGraph::outer_cycle() const {
  std::vector<Dart> orbit = face_orbit(outer_face);
  int start = -1;
  for (int i = 0; i < (int)orbit.size(); ++i)
    if (tail(orbit[i]) == roots.v1) start = i;
  if (start < 0) throw GraphError(Err::InternalInvariantBroken, "v1 not on outer face");
  std::vector<Vertex> cyc;
  cyc.reserve(orbit.size());
  for (int i = 0; i < (int)orbit.size(); ++i)
    cyc.push_back(tail(orbit[(start + i) % orbit.size()]));
  return cyc;
}

Dart PlanarGraph::dart_between(Vertex v, Vertex w) const {
  Dart d0 = vertex_dart[v];
  Dart d = d0;
  do {
    if (head(d) == w) return d;
    d = rot_next[d];
  } while (d != d0);
  return -1;
}

std::vector<std::vector<Vertex>> PlanarGraph::rotation_system() const {
  std::vector<std::vector<Vertex>> rot(n);
  for (Vertex v = 0; v < n; ++v)
    for (Dart d : out_darts(v)) rot[v].push_back(head(d));
  return rot;
}

namespace {

// Traces all orbits of face_next and fills fs. Every dart must be covered.
void trace_faces(PlanarGraph& g) {
  int nd = g.num_darts();
  g.faces.face_of.assign(nd, -1);
  g.faces.face_dart.clear();
  g.faces.face_size.clear();
  g.faces.count = 0;
  for (Dart d0 = 0; d0 < nd; ++d0) {
    if (g.faces.face_of[d0] != -1) continue;
    FaceId f = g.faces.count++;
    g.faces.face_dart.push_back(d0);
    int size = 0;
    Dart d = d0;
    do {
      g.faces.face_of[d] = f;
      ++size;
      d = g.face_next(d);
    } while (d != d0);
    g.faces.face_size.push_back(size);
  }
}

}  // namespace

PlanarGraph build_graph(const std::vector<std::vector<Vertex>>& rotations,
                        const std::vector<Vertex>& outer_witness, Roots roots) {
  int n = (int)rotations.size();
  if (n < 3) throw GraphError(Err::BadInput, "need at least 3 vertices");

  // Symmetry and simplicity of the adjacency described by the rotations.
  std::vector<std::set<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v) {
    if (rotations[v].empty())
      throw GraphError(Err::NonSymmetricAdjacency, "vertex " + std::to_string(v) + " is isolated");
    for (Vertex w : rotations[v]) {
      if (w < 0 || w >= n) throw GraphError(Err::BadInput, "neighbour id out of range");
      if (w == v)
        throw GraphError(Err::ParallelOrLoopEdge, "loop at vertex " + std::to_string(v));
      if (!adj[v].insert(w).second)
        throw GraphError(Err::ParallelOrLoopEdge,
                         "parallel edge " + std::to_string(v) + "-" + std::to_string(w));
    }
  }
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : adj[v])
      if (!adj[w].count(v))
        throw GraphError(Err::NonSymmetricAdjacency,
                         "edge " + std::to_string(v) + "-" + std::to_string(w) + " one-sided");

  // Assign edge ids scanning vertices in ascending order, rotation order.
  // Dart 2e always points low endpoint -> high endpoint, so this numbering is
  // reproducible from the rotation lists alone.
  std::map<std::pair<Vertex, Vertex>, EdgeId> edge_id;
  int m = 0;
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : rotations[v])
      if (v < w) edge_id[{v, w}] = m++;

  PlanarGraph g;
  g.n = n;
  g.roots = roots;
  g.dart_tail.assign(2 * m, -1);
  g.dart_head.assign(2 * m, -1);
  g.rot_next.assign(2 * m, -1);
  g.rot_prev.assign(2 * m, -1);
  g.vertex_dart.assign(n, -1);

  for (Vertex v = 0; v < n; ++v) {
    std::vector<Dart> darts;
    darts.reserve(rotations[v].size());
    for (Vertex w : rotations[v]) {
      EdgeId e = v < w ? edge_id[{v, w}] : edge_id[{w, v}];
      Dart d = v < w ? 2 * e : 2 * e + 1;
      g.dart_tail[d] = v;
      g.dart_head[d] = w;
      darts.push_back(d);
    }
    g.vertex_dart[v] = darts[0];
    int k = (int)darts.size();
    for (int i = 0; i < k; ++i) {
      g.rot_next[darts[i]] = darts[(i + 1) % k];
      g.rot_prev[darts[(i + 1) % k]] = darts[i];
    }
  }

  trace_faces(g);

  // Euler's formula; also fails for disconnected inputs (extra faces).
  if (g.faces.count != m - n + 2)
    throw GraphError(Err::EulerViolation,
                     "f=" + std::to_string(g.faces.count) + " edges=" + std::to_string(m) +
                         " n=" + std::to_string(n) + " violate f = m - n + 2");

  // Locate the outer face via the witness: consecutive a, b, c on its orbit.
  if (outer_witness.size() != 3)
    throw GraphError(Err::BadInput, "outer witness must list 3 consecutive outer vertices");
  Vertex a = outer_witness[0], b = outer_witness[1], c = outer_witness[2];
  g.outer_face = -1;
  Dart dab = g.dart_between(a, b);
  if (dab != -1 && g.head(g.face_next(dab)) == c) g.outer_face = g.faces.face_of[dab];
  if (g.outer_face == -1)
    throw GraphError(Err::OuterFaceNotFound, "witness is not a path on any face orbit");

  // Roots: distinct, and the outer orbit reads (..., v2, v1, vn, ...).
  if (roots.v1 < 0 || roots.v1 >= n || roots.v2 < 0 || roots.v2 >= n || roots.vn < 0 ||
      roots.vn >= n || roots.v1 == roots.v2 || roots.v1 == roots.vn || roots.v2 == roots.vn)
    throw GraphError(Err::BadRoots, "roots must be three distinct vertices");
  Dart d1n = g.dart_between(roots.v1, roots.vn);
  if (d1n == -1 || g.faces.face_of[d1n] != g.outer_face ||
      g.head(g.face_prev(d1n)) != roots.v1 || g.tail(g.face_prev(d1n)) != roots.v2)
    throw GraphError(Err::BadRoots, "outer orbit must pass v2, v1, vn in order");

  return g;
}

DualGraph dual(const PlanarGraph& g) {
  DualGraph dg;
  PlanarGraph& d = dg.graph;
  int nd = g.num_darts();
  d.n = g.faces.count;
  d.dart_tail.resize(nd);
  d.dart_head.resize(nd);
  d.rot_next.assign(nd, -1);
  d.rot_prev.assign(nd, -1);
  d.vertex_dart.assign(d.n, -1);

  // Dual dart d: left_face(d) -> right_face(d). The rotation around a dual
  // vertex is the primal face orbit reversed, which keeps the system clockwise.
  for (Dart t = 0; t < nd; ++t) {
    d.dart_tail[t] = g.left_face(t);
    d.dart_head[t] = g.right_face(t);
  }
  for (FaceId f = 0; f < g.faces.count; ++f) {
    std::vector<Dart> orbit = g.face_orbit(f);
    d.vertex_dart[f] = orbit[0];
    int k = (int)orbit.size();
    for (int i = 0; i < k; ++i) {
      d.rot_next[orbit[(i + 1) % k]] = orbit[i];
      d.rot_prev[orbit[i]] = orbit[(i + 1) % k];
    }
  }

  // Dual faces are the orbits of dual face_next; each groups the darts whose
  // primal head is one primal vertex, so the dual face count is g.n and Euler
  // holds by construction. Map them to the primal vertices they surround.
  d.faces.face_of.assign(nd, -1);
  d.faces.face_dart.clear();
  d.faces.face_size.clear();
  d.faces.count = 0;
  for (Dart t0 = 0; t0 < nd; ++t0) {
    if (d.faces.face_of[t0] != -1) continue;
    FaceId f = d.faces.count++;
    d.faces.face_dart.push_back(t0);
    int size = 0;
    Dart t = t0;
    do {
      d.faces.face_of[t] = f;
      ++size;
      t = d.face_next(t);
    } while (t != t0);
    d.faces.face_size.push_back(size);
  }
  if (d.faces.count != g.n)
    throw GraphError(Err::InternalInvariantBroken, "dual face count != primal vertex count");

  dg.face_vertex.assign(d.faces.count, -1);
  dg.vertex_face.assign(g.n, -1);
  for (Dart t = 0; t < nd; ++t) {
    Vertex pv = g.head(t);
    FaceId df = d.faces.face_of[t];
    if (dg.face_vertex[df] == -1) dg.face_vertex[df] = pv;
    if (dg.face_vertex[df] != pv)
      throw GraphError(Err::InternalInvariantBroken, "dual face mixes primal heads");
    dg.vertex_face[pv] = df;
  }

  d.outer_face = dg.vertex_face[g.roots.v1];

  // Dual roots: v1* = primal outer face, v2* = face of (vn -> v1),
  // vn* = face of (v1 -> v2). They sit as (v2*, v1*, vn*) on the dual outer
  // orbit around primal v1.
  d.roots.v1 = g.outer_face;
  Dart dn1 = g.dart_between(g.roots.vn, g.roots.v1);
  Dart d12 = g.dart_between(g.roots.v1, g.roots.v2);
  if (dn1 == -1 || d12 == -1)
    throw GraphError(Err::InternalInvariantBroken, "roots not adjacent in primal");
  d.roots.v2 = g.left_face(dn1);
  d.roots.vn = g.left_face(d12);
  return dg;
}

std::optional<std::pair<Vertex, Vertex>> find_separating_pair(const PlanarGraph& g, int bound,
                                                              bool force) {
  if (g.n < 4) throw GraphError(Err::BadInput, "3-connectivity needs n >= 4");
  if (g.n > bound && !force)
    throw GraphError(Err::TooLargeForBruteCheck,
                     "n=" + std::to_string(g.n) + " exceeds bound " + std::to_string(bound));
  std::vector<std::vector<Vertex>> adj(g.n);
  for (Vertex v = 0; v < g.n; ++v)
    for (Dart d : g.out_darts(v)) adj[v].push_back(g.head(d));

  std::vector<int> seen(g.n, -1);
  std::vector<Vertex> queue_buf(g.n);
  int stamp = 0;
  auto connected_without = [&](Vertex x, Vertex y) {
    ++stamp;
    Vertex start = -1;
    for (Vertex v = 0; v < g.n && start == -1; ++v)
      if (v != x && v != y) start = v;
    int head = 0, tail = 0;
    queue_buf[tail++] = start;
    seen[start] = stamp;
    int cnt = 1;
    while (head < tail) {
      Vertex v = queue_buf[head++];
      for (Vertex w : adj[v]) {
        if (w == x || w == y || seen[w] == stamp) continue;
        seen[w] = stamp;
        queue_buf[tail++] = w;
        ++cnt;
      }
    }
    return cnt == g.n - 2;
  };

  for (Vertex x = 0; x < g.n; ++x)
    for (Vertex y = x + 1; y < g.n; ++y)
      if (!connected_without(x, y)) return std::make_pair(x, y);
  return std::nullopt;
}

bool is_three_connected(const PlanarGraph& g, int bound, bool force) {
  return !find_separating_pair(g, bound, force).has_value();
}

}  // namespace cotree
