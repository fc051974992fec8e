// Acceptance suite: one PASS/FAIL line per criterion, exit 0 only when all
// pass. Tolerances and corpus parameters are pinned here on purpose; any
// behavioural drift in the library shows up as a FAIL line.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "cotree/generators.hpp"
#include "cotree/json_io.hpp"
#include "cotree/tree_extract.hpp"
#include "cotree/verify.hpp"

using namespace cotree;

namespace {

constexpr int kAcceptBruteGate = 64;     // dual validator brute checks up to this size
constexpr double kCorpusBudget = 10.0;   // seconds for criterion 1
constexpr double kBenchBudget = 5.0;     // seconds for the 100k pipeline run
constexpr double kBenchRatio = 2.6;      // allowed cost ratio per size doubling

int g_failures = 0;

void report(int id, bool ok, const std::string& text) {
  std::printf("%s - criterion %d: %s\n", ok ? "PASS" : "FAIL", id, text.c_str());
  if (!ok) g_failures++;
}

struct Entry {
  std::string name;
  PlanarGraph g;
  Pipeline p;
};

std::vector<Entry> build_corpus() {
  std::vector<std::pair<std::string, PlanarGraph>> raw;
  raw.emplace_back("tetrahedron", gen_tetrahedron());
  raw.emplace_back("cube", gen_cube());
  raw.emplace_back("dodecahedron", gen_dodecahedron());
  raw.emplace_back("wheel 8", gen_wheel(8));
  raw.emplace_back("wheel 13", gen_wheel(13));
  raw.emplace_back("prism 10", gen_prism(10));
  raw.emplace_back("prism 24", gen_prism(24));
  for (int i = 0; i < 193; ++i) {
    int n = 4 + (int)std::llround(i * 1996.0 / 192.0);
    raw.emplace_back("triangulation " + std::to_string(n) + "/" + std::to_string(1000 + i),
                     gen_triangulation(n, 1000 + i));
  }
  std::vector<Entry> out;
  out.reserve(raw.size());
  for (auto& [name, g] : raw) {
    Pipeline p = run_pipeline(g);
    out.push_back({name, std::move(g), std::move(p)});
  }
  return out;
}

std::vector<int> degrees_of(const PlanarGraph& g, const std::vector<EdgeId>& edges) {
  std::vector<int> deg(g.n, 0);
  for (EdgeId e : edges) {
    deg[g.tail(2 * e)]++;
    deg[g.head(2 * e)]++;
  }
  return deg;
}

int max_deg(const PlanarGraph& g, const std::vector<EdgeId>& edges) {
  auto deg = degrees_of(g, edges);
  return *std::max_element(deg.begin(), deg.end());
}

bool is_forest(const PlanarGraph& g, const std::vector<EdgeId>& edges, bool* connected_spanning) {
  std::vector<Vertex> parent(g.n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  bool forest = true;
  int comps = g.n;
  for (EdgeId e : edges) {
    Vertex a = find(g.tail(2 * e)), b = find(g.head(2 * e));
    if (a == b) forest = false;
    else {
      parent[a] = b;
      comps--;
    }
  }
  if (connected_spanning) *connected_spanning = comps == 1;
  return forest;
}

// first pair of vertices two apart on a face of size >= 4 (never adjacent in
// the families used here)
std::pair<Vertex, Vertex> pair_on_big_face(const PlanarGraph& g) {
  for (FaceId f = 0; f < g.faces.count; ++f) {
    auto orbit = g.face_orbit(f);
    if (orbit.size() < 4) continue;
    Vertex u = g.tail(orbit[0]), w = g.tail(orbit[2]);
    if (g.dart_between(u, w) < 0) return {u, w};
  }
  return {-1, -1};
}

PlanarGraph diamond() {
  return build_graph({{3, 1, 2}, {2, 0, 3}, {0, 1}, {1, 0}}, {2, 0, 3}, {0, 2, 3});
}

double median3(double a, double b, double c) {
  return std::max(std::min(a, b), std::min(std::max(a, b), c));
}

bool battery_flags(const PlanarGraph& g, const Pipeline& p, const EdgeAnnotation& ann) {
  return !check_annotation(g, p.en, ann).ok() || !check_face_orientation(g, ann).ok() ||
         !verify_label_correspondence(g, ann, p.dg, p.dual_ann).ok();
}

}  // namespace

int main() {
  // ---- criterion 1: parent-edge tree on the 200-graph corpus, under budget
  auto t0 = std::chrono::steady_clock::now();
  std::vector<Entry> corpus = build_corpus();
  bool c1 = corpus.size() == 200;
  for (Entry& e : corpus) {
    SpanningTreePair bt = barnette_tree(e.g, e.p.ann);
    bool sp = false;
    c1 = c1 && is_forest(e.g, bt.tree_edges, &sp) && sp;
    c1 = c1 && (int)bt.tree_edges.size() == e.g.n - 1;
    c1 = c1 && max_deg(e.g, bt.tree_edges) <= 3 && bt.max_deg_tree <= 3;
  }
  double el1 = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c1 = c1 && el1 < kCorpusBudget;
  {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "parent-edge tree spans with degree <= 3 on %zu graphs in %.2fs (budget %.0fs)",
                  corpus.size(), el1, kCorpusBudget);
    report(1, c1, buf);
  }

  // ---- criterion 2: simultaneous 5-tree whose co-tree is a dual 5-tree
  bool c2 = true;
  for (Entry& e : corpus) {
    SpanningTreePair ft = five_tree_from(e.g, e.p);
    bool sp = false;
    c2 = c2 && is_forest(e.g, ft.tree_edges, &sp) && sp;
    bool dsp = false;
    c2 = c2 && is_forest(e.p.dg.graph, ft.cotree_edges, &dsp) && dsp;
    c2 = c2 && max_deg(e.g, ft.tree_edges) <= 5;
    c2 = c2 && max_deg(e.p.dg.graph, ft.cotree_edges) <= 5;
    std::set<EdgeId> t(ft.tree_edges.begin(), ft.tree_edges.end());
    std::set<EdgeId> h(e.p.h.edges.begin(), e.p.h.edges.end());
    for (EdgeId x : e.p.h0) c2 = c2 && t.count(x) == 1;
    for (EdgeId x : ft.tree_edges) c2 = c2 && h.count(x) == 1;
  }
  report(2, c2,
         "five-tree and its co-tree span with degree <= 5, between the forced and allowed edges");

  // ---- criterion 3: H subgraph, H0 forest, duality gap, parent and label rules
  bool c3 = true;
  for (Entry& e : corpus) {
    std::vector<char> in_h(e.g.num_edges(), 0), in_dual_h(e.g.num_edges(), 0);
    for (EdgeId x : e.p.h.edges) in_h[x] = 1;
    for (EdgeId x : e.p.dual_h.edges) in_dual_h[x] = 1;
    for (EdgeId x = 0; x < e.g.num_edges(); ++x) c3 = c3 && (in_h[x] || in_dual_h[x]);
    auto deg = degrees_of(e.g, e.p.h.edges);
    c3 = c3 && *std::max_element(deg.begin(), deg.end()) <= 5;
    c3 = c3 && *std::min_element(deg.begin(), deg.end()) >= 1;
    bool conn = false;
    is_forest(e.g, e.p.h.edges, &conn);
    c3 = c3 && conn;
    c3 = c3 && is_forest(e.g, e.p.h0, nullptr);
    for (EdgeId x = 0; x < e.g.num_edges(); ++x) {
      bool zero = std::find(e.p.h0.begin(), e.p.h0.end(), x) != e.p.h0.end();
      c3 = c3 && zero == (in_h[x] && !in_dual_h[x]);
    }
    c3 = c3 && check_annotation(e.g, e.p.en, e.p.ann).ok();
    c3 = c3 && check_face_orientation(e.g, e.p.ann).ok();
  }
  report(3, c3, "H is a connected degree-5 cover, H0 a forest, labels and parents check out");

  // ---- criterion 4: dual canonical ordering and the correspondence rules
  bool c4 = true;
  for (Entry& e : corpus) {
    c4 = c4 && validate_canonical_ordering(e.p.dg.graph, e.p.dco.ordering, kAcceptBruteGate).ok();
    c4 = c4 && validate_canonical_ordering(e.g, e.p.co, kAcceptBruteGate).ok();
    c4 = c4 && check_annotation(e.p.dg.graph, e.p.dual_en, e.p.dual_ann).ok();
    c4 = c4 && verify_label_correspondence(e.g, e.p.ann, e.p.dg, e.p.dual_ann).ok();
  }
  report(4, c4, "both orderings validate (brute checks up to n = 64) and all 4 dual rules hold");

  // ---- criterion 5: constrained trees on 50 instances
  std::vector<std::tuple<std::string, PlanarGraph, Vertex, Vertex>> constrained;
  constrained.emplace_back("diamond", diamond(), 2, 3);
  for (int k = 3; k <= 27; ++k) {
    PlanarGraph g = gen_prism(k);
    auto [u, w] = pair_on_big_face(g);
    constrained.emplace_back("prism " + std::to_string(k), std::move(g), u, w);
  }
  for (int n = 6; n <= 29; ++n) {
    PlanarGraph g = gen_wheel(n);
    auto [u, w] = pair_on_big_face(g);
    constrained.emplace_back("wheel " + std::to_string(n), std::move(g), u, w);
  }
  bool c5 = constrained.size() == 50;
  for (auto& [name, g, u, w] : constrained) {
    if (u < 0) {
      c5 = false;
      continue;
    }
    try {
      SpanningTreePair t = constrained_barnette(g, u, w);
      bool sp = false;
      c5 = c5 && is_forest(g, t.tree_edges, &sp) && sp;
      auto deg = degrees_of(g, t.tree_edges);
      c5 = c5 && deg[u] == 1 && deg[w] == 1;
      c5 = c5 && *std::max_element(deg.begin(), deg.end()) <= 3;
      FaceId shared = -1;
      std::vector<char> at_u(g.faces.count, 0);
      for (Dart d : g.out_darts(u)) at_u[g.left_face(d)] = 1;
      for (Dart d : g.out_darts(w))
        if (at_u[g.left_face(d)]) shared = g.left_face(d);
      for (Dart d : g.face_orbit(shared)) {
        Vertex v = g.tail(d);
        if (v != u && v != w) c5 = c5 && deg[v] <= 2;
      }
    } catch (const GraphError& err) {
      std::printf("       criterion 5 instance %s failed: %s\n", name.c_str(), err.what());
      c5 = false;
    }
  }
  report(5, c5, "50 constrained instances pin the pair to degree 1, face peers to degree <= 2");

  // ---- criterion 6: the plain parent-edge co-tree can exceed degree 5
  bool c6 = false;
  std::string c6text = "no co-tree of degree >= 6 found within 500 seeds";
  for (uint64_t seed = 1; seed <= 500; ++seed) {
    PlanarGraph d = dual(gen_triangulation(32, seed)).graph;  // n = 60 <= 60
    Pipeline p = run_pipeline(d);
    SpanningTreePair bt = barnette_tree(d, p.ann);
    if (bt.max_deg_cotree >= 6) {
      c6 = true;
      c6text = "parent-edge co-tree reaches degree " + std::to_string(bt.max_deg_cotree) +
               " on a 60-vertex graph (seed " + std::to_string(seed) + ")";
      break;
    }
  }
  report(6, c6, c6text);

  // ---- criterion 7: exact counts against the determinant, and small-case degree pairs
  bool c7 = true;
  std::vector<std::pair<std::string, PlanarGraph>> small;
  small.emplace_back("tetrahedron", gen_tetrahedron());
  small.emplace_back("cube", gen_cube());
  for (int n = 4; n <= 8; ++n) small.emplace_back("wheel " + std::to_string(n), gen_wheel(n));
  small.emplace_back("prism 3", gen_prism(3));
  small.emplace_back("prism 4", gen_prism(4));
  for (int n = 4; n <= 8; ++n)
    for (uint64_t s : {1, 2, 3})
      small.emplace_back("triangulation " + std::to_string(n) + "/" + std::to_string(s),
                         gen_triangulation(n, s));
  c7 = c7 && small.size() >= 20;
  for (auto& [name, g] : small) {
    uint64_t by_enum = enumerate_spanning_trees(g, [](const std::vector<EdgeId>&) {});
    uint64_t by_det = count_spanning_trees_matrix_tree(g);
    if (by_enum != by_det) {
      std::printf("       criterion 7 count mismatch on %s: %llu vs %llu\n", name.c_str(),
                  (unsigned long long)by_enum, (unsigned long long)by_det);
      c7 = false;
    }
    DegreePair best = best_degree_pair(g);
    if (best.tree > 3 || best.cotree > 3) {
      std::printf("       criterion 7 NOTE: %s admits no (<=3, <=3) tree/co-tree pair, best (%d, %d)\n",
                  name.c_str(), best.tree, best.cotree);
      c7 = false;
    }
  }
  {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "%zu small fixtures: enumeration matches the determinant, all admit a (3,3) pair",
                  small.size());
    report(7, c7, buf);
  }

  // ---- criterion 8: walk visit bounds corpus-wide
  bool c8 = true;
  for (Entry& e : corpus) {
    SpanningTreePair ft = five_tree_from(e.g, e.p);
    Walk w = tree_to_walk(e.g, ft.tree_edges);
    c8 = c8 && (int)w.verts.size() == 2 * (e.g.n - 1) + 1;
    c8 = c8 && w.verts.front() == e.g.roots.v1 && w.verts.back() == e.g.roots.v1;
    c8 = c8 && w.max_vertex_visits <= 5 && w.max_face_visits <= 5;
  }
  report(8, c8, "closed walks visit every vertex and face at most 5 times across the corpus");

  // ---- criterion 9: scaling benchmark, medians of three runs
  bool c9 = true;
  double med[3] = {0, 0, 0};
  int sizes[3] = {25000, 50000, 100000};
  for (int i = 0; i < 3; ++i) {
    PlanarGraph g = gen_triangulation(sizes[i], 42);
    double runs[3];
    for (int r = 0; r < 3; ++r) {
      auto b0 = std::chrono::steady_clock::now();
      Pipeline p = run_pipeline(g);
      SpanningTreePair ft = five_tree_from(g, p);
      Walk w = tree_to_walk(g, ft.tree_edges);
      runs[r] = std::chrono::duration<double>(std::chrono::steady_clock::now() - b0).count();
      c9 = c9 && (int)w.verts.size() == 2 * (g.n - 1) + 1;
    }
    med[i] = median3(runs[0], runs[1], runs[2]);
  }
  c9 = c9 && med[2] <= kBenchBudget;
  c9 = c9 && med[1] / med[0] <= kBenchRatio && med[2] / med[1] <= kBenchRatio;
  {
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "medians 25k=%.3fs 50k=%.3fs 100k=%.3fs (ratios %.2f, %.2f; budget %.0fs, ratio "
                  "cap %.1f)",
                  med[0], med[1], med[2], med[1] / med[0], med[2] / med[1], kBenchBudget,
                  kBenchRatio);
    report(9, c9, buf);
  }

  // ---- criterion 10: defect catalog, every planted mutation must be detected
  std::vector<std::pair<std::string, PlanarGraph>> targets;
  targets.emplace_back("cube", gen_cube());
  targets.emplace_back("dodecahedron", gen_dodecahedron());
  targets.emplace_back("wheel 8", gen_wheel(8));
  targets.emplace_back("prism 6", gen_prism(6));
  targets.emplace_back("triangulation 12/5", gen_triangulation(12, 5));
  targets.emplace_back("triangulation 20/7", gen_triangulation(20, 7));
  int applied = 0, detected = 0;
  std::set<std::string> kinds_applied;
  auto tally = [&](const std::string& kind, const std::string& target, bool caught) {
    applied++;
    kinds_applied.insert(kind);
    if (caught) detected++;
    else std::printf("       criterion 10 miss: %s on %s went undetected\n", kind.c_str(),
                     target.c_str());
  };
  for (auto& [name, g] : targets) {
    Pipeline p = run_pipeline(g);

    {  // 1: swap the base group with its successor
      CanonicalOrdering bad = p.co;
      std::swap(bad.groups[0], bad.groups[1]);
      std::swap(bad.kinds[0], bad.kinds[1]);
      tally("group-swap", name, !validate_canonical_ordering(g, bad).ok());
    }
    {  // 2: reverse the first real chain, when the ordering has one
      CanonicalOrdering bad = p.co;
      for (size_t k = 1; k < bad.groups.size(); ++k)
        if (bad.groups[k].size() >= 2) {
          std::reverse(bad.groups[k].begin(), bad.groups[k].end());
          tally("chain-reverse", name, !validate_canonical_ordering(g, bad).ok());
          break;
        }
    }
    {  // 3: move a vertex into the last group
      CanonicalOrdering bad = p.co;
      bad.groups.back().push_back(bad.groups[1].back());
      bad.groups[1].pop_back();
      if (bad.groups[1].empty()) bad.groups.erase(bad.groups.begin() + 1);
      bad.kinds.assign(bad.groups.size(), GroupKind::Chain);
      for (size_t k = 0; k < bad.groups.size(); ++k)
        bad.kinds[k] = bad.groups[k].size() == 1 ? GroupKind::Singleton : GroupKind::Chain;
      tally("vertex-move", name, !validate_canonical_ordering(g, bad).ok());
    }
    {  // 4: flip the direction of one non-anchor edge
      EdgeAnnotation bad = p.ann;
      EdgeId anchor = edge_of(g.dart_between(g.roots.vn, g.roots.v1));
      EdgeId e = anchor == 0 ? 1 : 0;
      bad.dir[e] = twin(bad.dir[e]);
      tally("dir-flip", name, battery_flags(g, p, bad));
    }
    {  // 5: relabel the base edge at v1
      EdgeAnnotation bad = p.ann;
      bad.label[g.dart_between(g.roots.v1, g.roots.v2)] = Label::N;
      tally("relabel", name, battery_flags(g, p, bad));
    }
    SpanningTreePair bt = barnette_tree(g, p.ann);
    {  // 6: drop a tree edge
      auto edges = bt.tree_edges;
      edges.pop_back();
      tally("tree-drop", name, !verify_spanning_tree(g, edges).ok());
    }
    {  // 7: duplicate a tree edge in place of another
      auto edges = bt.tree_edges;
      edges.back() = edges.front();
      tally("tree-extra", name, !verify_spanning_tree(g, edges).ok());
    }
    {  // 8: tamper with the dual ordering's base group
      CanonicalOrdering bad = p.dco.ordering;
      std::reverse(bad.groups[0].begin(), bad.groups[0].end());
      tally("dual-base-swap", name, !validate_canonical_ordering(p.dg.graph, bad).ok());
    }
    {  // 9: reassign the top vertex's parent to a different incoming edge
      EdgeAnnotation bad = p.ann;
      Vertex vn = g.roots.vn;
      EdgeId other = -1;
      for (Dart d : g.out_darts(vn)) {
        EdgeId e = edge_of(d);
        if (bad.dir[e] == twin(d) && e != bad.parent[vn]) other = e;  // incoming at vn
      }
      if (other >= 0) {
        bad.parent[vn] = other;
        tally("parent-reassign", name, battery_flags(g, p, bad));
      }
    }
    {  // 10: reverse one rotation list and rebuild
      auto rot = g.rotation_system();
      std::reverse(rot[g.roots.vn].begin(), rot[g.roots.vn].end());
      bool caught = false;
      try {
        PlanarGraph h = build_graph(rot, {g.roots.v2, g.roots.v1, g.roots.vn}, g.roots);
        auto co = compute_canonical_ordering(h);
        caught = !validate_canonical_ordering(h, co).ok();
      } catch (const GraphError&) {
        caught = true;
      }
      tally("rotation-reverse", name, caught);
    }
  }
  bool c10 = kinds_applied.size() >= 8 && detected == applied && applied > 0;
  {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%d/%d planted defects across %zu mutation kinds detected",
                  detected, applied, kinds_applied.size());
    report(10, c10, buf);
  }

  return g_failures == 0 ? 0 : 1;
}
