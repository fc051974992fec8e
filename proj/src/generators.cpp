#include "cotree/generators.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

namespace cotree {

namespace {

// Applies the shared root rule: trace the face left of dart (0 -> rot[0][0])
// straight from the rotation lists, declare it the outer face, and root at
// v1 = 0 with v2 = its ccw outer neighbour (orbit predecessor) and vn = its cw
// outer neighbour (orbit successor).
PlanarGraph rooted_from_rotations(const std::vector<std::vector<Vertex>>& rot) {
  int n = (int)rot.size();
  std::vector<std::unordered_map<Vertex, int>> pos(n);
  for (Vertex v = 0; v < n; ++v)
    for (int i = 0; i < (int)rot[v].size(); ++i) pos[v].emplace(rot[v][i], i);
  std::vector<Vertex> cyc;
  Vertex u = 0, w = rot[0][0];
  do {
    cyc.push_back(u);
    int i = pos[w].at(u);
    Vertex x = rot[w][(i + 1) % rot[w].size()];
    u = w;
    w = x;
  } while (!(u == 0 && w == rot[0][0]));
  Roots roots{0, cyc.back(), cyc[1]};
  return build_graph(rot, {cyc.back(), 0, cyc[1]}, roots);
}

void insert_before(std::vector<Vertex>& rotation, Vertex before, Vertex x) {
  auto it = std::find(rotation.begin(), rotation.end(), before);
  rotation.insert(it, x);
}

}  // namespace

PlanarGraph gen_tetrahedron() {
  return rooted_from_rotations({{2, 3, 1}, {0, 3, 2}, {1, 3, 0}, {2, 1, 0}});
}

PlanarGraph gen_cube() {
  // Bottom face 0..3, top face 4..7, verticals i -- i+4; drawn with the
  // 0-1-5-4 side as the outer face.
  return rooted_from_rotations({{4, 3, 1},
                                {0, 2, 5},
                                {3, 6, 1},
                                {7, 2, 0},
                                {5, 7, 0},
                                {4, 1, 6},
                                {7, 5, 2},
                                {4, 6, 3}});
}

PlanarGraph gen_dodecahedron() {
  // Four concentric layers of 5: outer pentagon p_i = i, spoke targets
  // q_i = 5+i, ring r_i = 10+i (adjacent to q_i and q_{i-1}), inner pentagon
  // s_i = 15+i.
  std::vector<std::vector<Vertex>> rot(20);
  auto m5 = [](int i) { return (i % 5 + 5) % 5; };
  for (int i = 0; i < 5; ++i) {
    rot[i] = {m5(i + 1), 5 + i, m5(i - 1)};
    rot[5 + i] = {i, 10 + m5(i + 1), 10 + i};
    rot[10 + i] = {5 + i, 15 + i, 5 + m5(i - 1)};
    rot[15 + i] = {10 + i, 15 + m5(i + 1), 15 + m5(i - 1)};
  }
  return rooted_from_rotations(rot);
}

PlanarGraph gen_wheel(int n) {
  if (n < 4) throw GraphError(Err::BadParams, "wheel needs n >= 4");
  std::vector<std::vector<Vertex>> rot(n);
  for (Vertex v = 1; v < n; ++v) rot[0].push_back(v);
  for (Vertex v = 1; v < n; ++v) {
    Vertex next = v == n - 1 ? 1 : v + 1;
    Vertex prev = v == 1 ? n - 1 : v - 1;
    rot[v] = {next, 0, prev};
  }
  return rooted_from_rotations(rot);
}

PlanarGraph gen_prism(int k) {
  if (k < 3) throw GraphError(Err::BadParams, "prism needs k >= 3");
  std::vector<std::vector<Vertex>> rot(2 * k);
  for (int i = 0; i < k; ++i) {
    rot[i] = {(i + 1) % k, k + i, (i + k - 1) % k};
    rot[k + i] = {i, k + (i + 1) % k, k + (i + k - 1) % k};
  }
  return rooted_from_rotations(rot);
}

PlanarGraph gen_triangulation(int n, uint64_t seed) {
  if (n < 4) throw GraphError(Err::BadParams, "triangulation needs n >= 4");
  SplitMix64 rng(seed);
  // Rotations plus oriented face triples (a,b,c) listed in face-orbit order.
  std::vector<std::vector<Vertex>> rot = {{2, 1}, {0, 2}, {1, 0}};
  rot.reserve(n);
  std::vector<std::array<Vertex, 3>> faces = {{0, 1, 2}, {0, 2, 1}};
  faces.reserve(2 * n);
  for (Vertex x = 3; x < n; ++x) {
    size_t pick = (size_t)(rng() % faces.size());
    std::array<Vertex, 3> f = faces[pick];
    faces[pick] = faces.back();
    faces.pop_back();
    Vertex a = f[0], b = f[1], c = f[2];
    insert_before(rot[a], b, x);
    insert_before(rot[b], c, x);
    insert_before(rot[c], a, x);
    rot.push_back({a, c, b});
    faces.push_back({a, b, x});
    faces.push_back({b, c, x});
    faces.push_back({c, a, x});
  }
  return rooted_from_rotations(rot);
}

}  // namespace cotree
