#include "cotree/tree_extract.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <unordered_map>

#include "cotree/verify.hpp"

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

int max_primal_degree(const PlanarGraph& g, const std::vector<EdgeId>& edges) {
  std::vector<int> deg(g.n, 0);
  for (EdgeId e : edges) {
    deg[g.tail(2 * e)]++;
    deg[g.head(2 * e)]++;
  }
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

int max_dual_degree(const PlanarGraph& g, const std::vector<EdgeId>& edges) {
  std::vector<int> deg(g.faces.count, 0);
  for (EdgeId e : edges) {
    deg[g.left_face(2 * e)]++;
    deg[g.right_face(2 * e)]++;
  }
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

SpanningTreePair make_pair_checked(const PlanarGraph& g, std::vector<EdgeId> tree) {
  std::sort(tree.begin(), tree.end());
  SpanningTreePair t;
  t.cotree_edges = co_tree(g, tree);
  t.tree_edges = std::move(tree);
  t.max_deg_tree = max_primal_degree(g, t.tree_edges);
  t.max_deg_cotree = max_dual_degree(g, t.cotree_edges);
  return t;
}

}  // namespace

Pipeline run_pipeline(const PlanarGraph& g) {
  Pipeline p;
  p.co = compute_canonical_ordering(g);
  p.en = enumerate_vertices(g, p.co);
  p.ann = label_edges(g, p.co, p.en);
  p.dg = dual(g);
  p.dco = dual_canonical_ordering(g, p.co, p.dg);
  auto rep = validate_canonical_ordering(p.dg.graph, p.dco.ordering, 0);
  if (!rep.ok())
    throw GraphError(Err::InternalInvariantBroken,
                     "dual ordering fails validation: " + rep.findings.front().check + " at " +
                         rep.findings.front().where);
  p.dual_en = enumerate_vertices(p.dg.graph, p.dco.ordering);
  p.dual_ann = label_edges(p.dg.graph, p.dco.ordering, p.dual_en);
  p.h = h_edges(g, p.ann);
  p.dual_h = h_edges(p.dg.graph, p.dual_ann);
  p.h0 = h_zero(g, p.h, p.dual_h);
  return p;
}

SpanningTreePair barnette_tree(const PlanarGraph& g, const EdgeAnnotation& ann) {
  std::vector<EdgeId> tree;
  tree.reserve(g.n - 1);
  for (Vertex v = 0; v < g.n; ++v) {
    if (v == g.roots.v1) continue;
    if (ann.parent[v] < 0)
      throw GraphError(Err::InternalInvariantBroken, "vertex without a parent edge");
    tree.push_back(ann.parent[v]);
  }
  return make_pair_checked(g, std::move(tree));
}

SpanningTreePair constrained_barnette(const PlanarGraph& g, Vertex u, Vertex w,
                                      int three_conn_gate) {
  if (u < 0 || u >= g.n || w < 0 || w >= g.n || u == w)
    throw GraphError(Err::BadParams, "need two distinct vertices of the graph");
  if (g.dart_between(u, w) >= 0)
    throw GraphError(Err::BadParams, "the two vertices must not be adjacent");
  FaceId f = -1;
  {
    std::vector<char> at_u(g.faces.count, 0);
    for (Dart d : g.out_darts(u)) at_u[g.left_face(d)] = 1;
    for (Dart d : g.out_darts(w)) {
      FaceId fw = g.left_face(d);
      if (!at_u[fw]) continue;
      if (f != -1 && f != fw)
        throw GraphError(Err::BadParams, "vertices share more than one face");
      f = fw;
    }
  }
  if (f < 0) throw GraphError(Err::BadParams, "vertices do not share a face");
  Dart du = -1, dw = -1;
  for (Dart d : g.face_orbit(f)) {
    if (g.tail(d) == u) du = d;
    if (g.tail(d) == w) dw = d;
  }
  auto rot = g.rotation_system();
  auto insert_before = [&](Vertex at, Vertex before, Vertex x) {
    auto& r = rot[at];
    r.insert(std::find(r.begin(), r.end(), before), x);
  };
  insert_before(u, g.head(du), w);
  insert_before(w, g.head(dw), u);
  // trace the face left of the new dart u -> w; it becomes the outer face,
  // rooted v1 = u, vn = w
  std::vector<Vertex> cyc;
  {
    std::vector<std::unordered_map<Vertex, int>> pos(g.n);
    for (Vertex v = 0; v < g.n; ++v)
      for (int i = 0; i < (int)rot[v].size(); ++i) pos[v].emplace(rot[v][i], i);
    Vertex a = u, b = w;
    do {
      cyc.push_back(a);
      int i = pos[b].at(a);
      Vertex x = rot[b][(i + 1) % rot[b].size()];
      a = b;
      b = x;
    } while (!(a == u && b == w));
  }
  PlanarGraph aug = build_graph(rot, {cyc.back(), u, w}, Roots{u, cyc.back(), w});
  if (aug.n <= three_conn_gate && !is_three_connected(aug, three_conn_gate))
    throw GraphError(Err::AugmentationNotThreeConnected,
                     "graph plus the new edge is not 3-connected");
  CanonicalOrdering co;
  try {
    co = compute_canonical_ordering(aug);
  } catch (const GraphError& ge) {
    if (ge.code() == Err::NotThreeConnected)
      throw GraphError(Err::AugmentationNotThreeConnected,
                       "graph plus the new edge is not 3-connected");
    throw;
  }
  auto en = enumerate_vertices(aug, co);
  auto ann = orient_edges(aug, en);
  std::vector<EdgeId> tree;
  tree.reserve(g.n - 1);
  for (Vertex v = 0; v < aug.n; ++v) {
    if (v == aug.roots.v1) continue;
    Dart pd = 2 * ann.parent[v];
    Dart orig = g.dart_between(aug.tail(pd), aug.head(pd));
    if (orig < 0)
      throw GraphError(Err::InternalInvariantBroken, "parent tree uses the augmentation edge");
    tree.push_back(edge_of(orig));
  }
  return make_pair_checked(g, std::move(tree));
}

HSubgraph h_edges(const PlanarGraph& g, const EdgeAnnotation& ann) {
  HSubgraph h;
  h.rule_tags.assign(g.num_edges(), 0);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    Label lt = ann.label[ann.dir[e]], lh = ann.label[twin(ann.dir[e])];
    if ((lt == Label::E && lh == Label::W) || (lt == Label::W && lh == Label::E))
      h.rule_tags[e] |= HSubgraph::H1;
  }
  for (Vertex v = 0; v < g.n; ++v) {
    if (ann.nnw[v] >= 0) h.rule_tags[edge_of(ann.nnw[v])] |= HSubgraph::H2;
    if (ann.nne[v] >= 0) h.rule_tags[edge_of(ann.nne[v])] |= HSubgraph::H3;
    Dart nd = ann.north[v];
    if (nd >= 0 && ann.parent[g.head(nd)] == edge_of(nd))
      h.rule_tags[edge_of(nd)] |= HSubgraph::H4;
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (h.rule_tags[e]) h.edges.push_back(e);
  return h;
}

std::vector<EdgeId> h_zero(const PlanarGraph& g, const HSubgraph& h, const HSubgraph& dual_h) {
  std::vector<EdgeId> h0;
  for (EdgeId e : h.edges)
    if (!dual_h.rule_tags[e]) h0.push_back(e);
  DSU dsu(g.n);
  for (EdgeId e : h0)
    if (!dsu.unite(g.tail(2 * e), g.head(2 * e)))
      throw GraphError(Err::InternalInvariantBroken, "H0 contains a cycle");
  return h0;
}

SpanningTreePair five_tree_from(const PlanarGraph& g, const Pipeline& p) {
  int m = g.num_edges();
  std::vector<char> zero(m, 0);
  for (EdgeId e : p.h0) zero[e] = 1;
  std::vector<char> in_tree(g.n, 0);
  // Prim from v1 over H with weights 0 on H0 and 1 elsewhere; within a weight
  // class the smallest edge id wins. Lazy deletion keeps both heaps cheap.
  std::priority_queue<EdgeId, std::vector<EdgeId>, std::greater<EdgeId>> heap0, heap1;
  auto add_vertex = [&](Vertex v) {
    in_tree[v] = 1;
    for (Dart d : g.out_darts(v)) {
      EdgeId e = edge_of(d);
      if (p.h.rule_tags[e]) (zero[e] ? heap0 : heap1).push(e);
    }
  };
  auto crossing = [&](EdgeId e) { return in_tree[g.tail(2 * e)] != in_tree[g.head(2 * e)]; };
  std::vector<EdgeId> tree;
  tree.reserve(g.n - 1);
  add_vertex(g.roots.v1);
  for (int step = 1; step < g.n; ++step) {
    EdgeId pick = -1;
    for (auto* heap : {&heap0, &heap1}) {
      while (!heap->empty() && !crossing(heap->top())) heap->pop();
      if (!heap->empty()) {
        pick = heap->top();
        heap->pop();
        break;
      }
    }
    if (pick < 0) throw GraphError(Err::InternalInvariantBroken, "H does not span the graph");
    tree.push_back(pick);
    add_vertex(in_tree[g.tail(2 * pick)] ? g.head(2 * pick) : g.tail(2 * pick));
  }
  std::vector<char> in_t(m, 0);
  for (EdgeId e : tree) in_t[e] = 1;
  for (EdgeId e : p.h0)
    if (!in_t[e])
      throw GraphError(Err::InternalInvariantBroken, "tree dropped a forced zero-weight edge");
  return make_pair_checked(g, std::move(tree));
}

SpanningTreePair five_tree(const PlanarGraph& g) {
  Pipeline p = run_pipeline(g);
  return five_tree_from(g, p);
}

std::vector<EdgeId> co_tree(const PlanarGraph& g, const std::vector<EdgeId>& tree_edges) {
  auto rep = verify_spanning_tree(g, tree_edges);
  if (!rep.ok()) throw GraphError(Err::NotASpanningTree, rep.findings.front().message);
  std::vector<char> in(g.num_edges(), 0);
  for (EdgeId e : tree_edges) in[e] = 1;
  std::vector<EdgeId> co;
  co.reserve(g.num_edges() - (int)tree_edges.size());
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (!in[e]) co.push_back(e);
  DSU dsu(g.faces.count);
  int joins = 0;
  for (EdgeId e : co) {
    if (!dsu.unite(g.left_face(2 * e), g.right_face(2 * e)))
      throw GraphError(Err::InternalInvariantBroken, "co-tree has a cycle in the dual");
    joins++;
  }
  if (joins != g.faces.count - 1)
    throw GraphError(Err::InternalInvariantBroken, "co-tree does not span the dual");
  return co;
}

Walk tree_to_walk(const PlanarGraph& g, const std::vector<EdgeId>& tree_edges) {
  auto co = co_tree(g, tree_edges);  // also validates the tree
  if (max_primal_degree(g, tree_edges) > 5)
    throw GraphError(Err::PreconditionDegree, "tree degree exceeds 5");
  if (max_dual_degree(g, co) > 5)
    throw GraphError(Err::PreconditionDegree, "co-tree degree exceeds 5");
  std::vector<char> in_t(g.num_edges(), 0);
  for (EdgeId e : tree_edges) in_t[e] = 1;
  Dart start = -1;
  for (Dart d : g.out_darts(g.roots.v1))
    if (in_t[edge_of(d)]) {
      start = d;
      break;
    }
  int steps = 2 * (g.n - 1);
  Walk wk;
  wk.verts.reserve(steps + 1);
  wk.verts.push_back(g.roots.v1);
  std::vector<Dart> step_darts;
  step_darts.reserve(steps);
  Dart d = start;
  for (int i = 0; i < steps; ++i) {
    step_darts.push_back(d);
    wk.verts.push_back(g.head(d));
    Dart e = twin(d);
    do e = g.rot_next[e];
    while (!in_t[edge_of(e)]);
    d = e;
  }
  if (wk.verts.back() != g.roots.v1)
    throw GraphError(Err::InternalInvariantBroken, "walk does not close at v1");
  std::vector<int> occ(g.n, 0);
  for (int i = 0; i < steps; ++i) occ[wk.verts[i]]++;
  wk.max_vertex_visits = *std::max_element(occ.begin(), occ.end());
  // face visits: positions of the steps along each face boundary, counted as
  // maximal cyclic runs
  std::vector<std::vector<int>> pos(g.faces.count);
  for (int i = 0; i < steps; ++i) {
    EdgeId e = edge_of(step_darts[i]);
    FaceId l = g.left_face(2 * e), r = g.right_face(2 * e);
    pos[l].push_back(i);
    if (r != l) pos[r].push_back(i);
  }
  for (FaceId f = 0; f < g.faces.count; ++f) {
    const auto& P = pos[f];
    if (P.empty()) continue;
    int runs = 1;
    for (size_t j = 0; j + 1 < P.size(); ++j)
      if (P[j + 1] > P[j] + 1) runs++;
    if (runs > 1 && P.front() == 0 && P.back() == steps - 1) runs--;
    wk.max_face_visits = std::max(wk.max_face_visits, runs);
  }
  return wk;
}

}  // namespace cotree
