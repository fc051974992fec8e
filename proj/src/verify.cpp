#include "cotree/verify.hpp"

#include <algorithm>
#include <numeric>

namespace cotree {

namespace {

struct DSU {
  std::vector<int> p;
  explicit DSU(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[b] = a;
    return true;
  }
};

// union-find without path compression so that unions can be undone in reverse
// order during the enumeration
struct RollbackDSU {
  std::vector<int> p, sz;
  std::vector<int> trail;
  explicit RollbackDSU(int n) : p(n), sz(n, 1) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) const {
    while (p[x] != x) x = p[x];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (sz[a] < sz[b]) std::swap(a, b);
    p[b] = a;
    sz[a] += sz[b];
    trail.push_back(b);
    return true;
  }
  void undo() {
    int b = trail.back();
    trail.pop_back();
    sz[p[b]] -= sz[b];
    p[b] = b;
  }
};

}  // namespace

ValidationReport verify_spanning_tree(const PlanarGraph& g, const std::vector<EdgeId>& edges) {
  ValidationReport rep;
  if ((int)edges.size() != g.n - 1)
    rep.add("tree-edge-count", "tree",
            "expected " + std::to_string(g.n - 1) + " edges, got " + std::to_string(edges.size()));
  std::vector<char> seen(g.num_edges(), 0);
  for (EdgeId e : edges) {
    if (e < 0 || e >= g.num_edges()) {
      rep.add("tree-edge-range", "edge " + std::to_string(e), "edge id out of range");
      return rep;
    }
    if (seen[e]) rep.add("tree-edge-dup", "edge " + std::to_string(e), "edge listed twice");
    seen[e] = 1;
  }
  DSU dsu(g.n);
  for (EdgeId e : edges)
    if (!dsu.unite(g.tail(2 * e), g.head(2 * e)))
      rep.add("tree-acyclic", "edge " + std::to_string(e), "edge closes a cycle");
  int comps = 0;
  for (Vertex v = 0; v < g.n; ++v)
    if (dsu.find(v) == v) comps++;
  if (comps != 1)
    rep.add("tree-connected", "tree",
            "edges leave " + std::to_string(comps) + " components");
  return rep;
}

DegreeProfile degree_profile(const PlanarGraph& g, const std::vector<EdgeId>& edges) {
  std::vector<int> deg(g.n, 0);
  for (EdgeId e : edges) {
    deg[g.tail(2 * e)]++;
    deg[g.head(2 * e)]++;
  }
  DegreeProfile p;
  p.max_degree = deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
  p.histogram.assign(p.max_degree + 1, 0);
  for (int d : deg) p.histogram[d]++;
  return p;
}

uint64_t enumerate_spanning_trees(const PlanarGraph& g,
                                  const std::function<void(const std::vector<EdgeId>&)>& visit,
                                  int gate) {
  if (g.n > gate)
    throw GraphError(Err::TooLarge, "spanning tree enumeration is limited to " +
                                        std::to_string(gate) + " vertices");
  int m = g.num_edges();
  RollbackDSU dsu(g.n);
  std::vector<EdgeId> chosen;
  uint64_t count = 0;
  // can the current partition still be connected using edges i..m-1 only?
  auto connectable = [&](int i) {
    DSU probe(g.n);
    int comps = g.n;
    for (int r = 0; r < g.n; ++r)
      if (dsu.find(r) != r) comps--;
    for (EdgeId e = i; e < m && comps > 1; ++e)
      if (probe.unite(dsu.find(g.tail(2 * e)), dsu.find(g.head(2 * e)))) comps--;
    return comps == 1;
  };
  auto rec = [&](auto&& self, int i) -> void {
    if ((int)chosen.size() == g.n - 1) {
      count++;
      if (visit) visit(chosen);
      return;
    }
    if (i == m) return;
    if (dsu.unite(g.tail(2 * i), g.head(2 * i))) {
      chosen.push_back(i);
      self(self, i + 1);
      chosen.pop_back();
      dsu.undo();
    }
    if (connectable(i + 1)) self(self, i + 1);
  };
  rec(rec, 0);
  return count;
}

uint64_t count_spanning_trees_matrix_tree(const PlanarGraph& g) {
  // fraction-free Gaussian elimination on a Laplacian minor; the final pivot
  // is the determinant. Gate keeps the __int128 intermediates exact.
  if (g.n > 20)
    throw GraphError(Err::TooLarge, "matrix-tree count is limited to 20 vertices");
  int k = g.n - 1;
  std::vector<std::vector<__int128>> a(k, std::vector<__int128>(k, 0));
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    Vertex u = g.tail(2 * e), v = g.head(2 * e);
    if (u < k) a[u][u]++;
    if (v < k) a[v][v]++;
    if (u < k && v < k) {
      a[u][v]--;
      a[v][u]--;
    }
  }
  // the minor is positive definite for a connected graph, so every pivot is a
  // positive leading principal minor and no row swaps are needed
  __int128 prev = 1;
  for (int i = 0; i < k; ++i) {
    if (a[i][i] <= 0)
      throw GraphError(Err::InternalInvariantBroken, "non-positive pivot in Laplacian minor");
    for (int r = i + 1; r < k; ++r) {
      for (int c = i + 1; c < k; ++c) a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) / prev;
      a[r][i] = 0;
    }
    prev = a[i][i];
  }
  return (uint64_t)a[k - 1][k - 1];
}

DegreePair best_degree_pair(const PlanarGraph& g, int gate) {
  std::vector<int> dual_full(g.faces.count);
  for (FaceId f = 0; f < g.faces.count; ++f) dual_full[f] = g.faces.face_size[f];
  DegreePair best{g.n, g.n};
  auto key = [](const DegreePair& p) {
    return std::pair<int, int>(std::max(p.tree, p.cotree), p.tree + p.cotree);
  };
  enumerate_spanning_trees(
      g,
      [&](const std::vector<EdgeId>& tree) {
        std::vector<int> deg(g.n, 0);
        std::vector<int> dual(dual_full);
        for (EdgeId e : tree) {
          deg[g.tail(2 * e)]++;
          deg[g.head(2 * e)]++;
          dual[g.left_face(2 * e)]--;
          dual[g.right_face(2 * e)]--;
        }
        DegreePair cand{*std::max_element(deg.begin(), deg.end()),
                        *std::max_element(dual.begin(), dual.end())};
        if (key(cand) < key(best)) best = cand;
      },
      gate);
  return best;
}

}  // namespace cotree
