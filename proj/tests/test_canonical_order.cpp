#include <algorithm>
#include <unordered_set>

#include "cotree/canonical_order.hpp"
#include "cotree/generators.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace cotree;
using cotree::test::code_of;
using cotree::test::has_finding;

namespace {

// W5 embedded with the hub as vn: the top vertex has degree four, so its
// removal exposes a fan over a three-dart incoming block.
PlanarGraph w5_hub_top() {
  return build_graph({{1, 4, 3}, {4, 0, 2}, {3, 4, 1}, {0, 4, 2}, {3, 0, 1, 2}}, {1, 0, 4},
                     {0, 1, 4});
}

// Reference peel used as an oracle: after every removal it rebuilds the
// boundary cycle, face liveness and the (outv, oute) counters from scratch,
// then removes the legal candidate with the smallest key (vertex id for a
// singleton, minimum member for a degree-2 run). The production peel reaches
// the same selection incrementally through its pending queue and dirty marks,
// so both must emit identical orderings.
struct ReferencePeel {
  const PlanarGraph& g;
  std::vector<char> removed;
  std::vector<Vertex> nextC, prevC;
  std::vector<char> on_c, f_alive;
  std::vector<int> outv, oute;
  int remaining;

  explicit ReferencePeel(const PlanarGraph& gg)
      : g(gg),
        removed(gg.n, 0),
        nextC(gg.n, -1),
        prevC(gg.n, -1),
        on_c(gg.n, 0),
        remaining(gg.n) {}

  bool is_root(Vertex v) const { return v == g.roots.v1 || v == g.roots.v2; }

  int cur_deg(Vertex v) const {
    int k = 0;
    for (Dart d : g.out_darts(v)) k += removed[g.head(d)] ? 0 : 1;
    return k;
  }
  int visited(Vertex v) const {
    int k = 0;
    for (Dart d : g.out_darts(v)) k += removed[g.head(d)] ? 1 : 0;
    return k;
  }

  // face_next of the embedding induced on the alive vertices
  Dart boundary_next(Dart d) const {
    Dart e = g.face_next(d);
    while (removed[g.head(e)]) e = g.rot_next[e];
    return e;
  }

  void refresh() {
    std::fill(on_c.begin(), on_c.end(), 0);
    Dart start = g.dart_between(g.roots.v2, g.roots.v1);
    REQUIRE(start >= 0);
    Dart d = start;
    int guard = g.num_darts() + 1;
    do {
      REQUIRE(--guard > 0);
      nextC[g.tail(d)] = g.head(d);
      prevC[g.head(d)] = g.tail(d);
      on_c[g.tail(d)] = 1;
      d = boundary_next(d);
    } while (d != start);
    f_alive.assign(g.faces.count, 1);
    outv.assign(g.faces.count, 0);
    oute.assign(g.faces.count, 0);
    for (FaceId f = 0; f < g.faces.count; ++f)
      for (Dart e : g.face_orbit(f)) {
        Vertex t = g.tail(e), h = g.head(e);
        if (removed[t]) f_alive[f] = 0;
        if (!on_c[t]) continue;
        outv[f]++;
        if (on_c[h] && (nextC[t] == h || nextC[h] == t)) oute[f]++;
      }
  }

  bool walk_singleton(Vertex z) const {
    Vertex u = prevC[z], w = nextC[z];
    Dart d = g.dart_between(z, u);
    if (d < 0) return false;
    int guard = cur_deg(z) + 2;
    std::vector<Dart> arc;
    while (true) {
      if (--guard < 0) return false;
      FaceId f = g.faces.face_of[d];
      if (!f_alive[f]) return false;
      bool pair_ok = (outv[f] == 1 && oute[f] == 0) || (outv[f] == 2 && oute[f] == 1);
      if (!pair_ok) return false;
      Dart e = g.face_next(d);
      int inner = g.faces.face_size[f] + 1;
      while (g.head(e) != z) {
        if (--inner < 0) return false;
        arc.push_back(e);
        e = g.face_next(e);
      }
      if (g.tail(e) == w) break;
      d = twin(e);
    }
    for (size_t i = 0; i + 1 < arc.size(); ++i)
      if (on_c[g.head(arc[i])]) return false;
    return true;
  }

  bool walk_chain(const std::vector<Vertex>& run) const {
    Vertex z1 = run.front(), zl = run.back();
    Vertex u = prevC[z1], w = nextC[zl];
    int l = (int)run.size();
    for (Vertex x : run)
      if (visited(x) < 1) return false;
    Dart d0 = g.dart_between(z1, u);
    if (d0 < 0) return false;
    FaceId f = g.faces.face_of[d0];
    if (!f_alive[f]) return false;
    for (Vertex x : run) {
      Dart dx = g.dart_between(x, prevC[x]);
      if (dx < 0 || g.faces.face_of[dx] != f) return false;
    }
    if (outv[f] != l + 2) return false;
    int diff = outv[f] - oute[f];
    if (!(diff == 1 || (diff == 0 && remaining == l + 2))) return false;
    std::unordered_set<Vertex> in_run(run.begin(), run.end());
    int guard = g.faces.face_size[f] + 1;
    std::vector<Dart> arc;
    Dart e = g.face_next(d0);
    while (true) {
      if (--guard < 0) return false;
      arc.push_back(e);
      if (g.head(e) == w) break;
      if (in_run.count(g.head(e))) return false;
      e = g.face_next(e);
    }
    for (size_t i = 0; i + 1 < arc.size(); ++i)
      if (on_c[g.head(arc[i])]) return false;
    return true;
  }

  std::vector<Vertex> expand_run(Vertex z) const {
    std::vector<Vertex> run{z};
    for (Vertex x = prevC[z]; !is_root(x) && cur_deg(x) == 2; x = prevC[x]) run.push_back(x);
    std::reverse(run.begin(), run.end());
    for (Vertex x = nextC[z]; !is_root(x) && cur_deg(x) == 2; x = nextC[x]) run.push_back(x);
    return run;
  }

  CanonicalOrdering run() {
    std::vector<std::vector<Vertex>> rgroups;
    std::vector<GroupKind> rkinds;
    refresh();
    REQUIRE(walk_singleton(g.roots.vn));
    removed[g.roots.vn] = 1;
    remaining--;
    rgroups.push_back({g.roots.vn});
    rkinds.push_back(GroupKind::Singleton);
    while (remaining > 2) {
      refresh();
      std::vector<Vertex> best;  // kept in boundary order, keyed by its minimum member
      int best_key = g.n;
      for (Vertex z = 0; z < g.n; ++z) {
        if (removed[z] || !on_c[z] || is_root(z)) continue;
        int dz = cur_deg(z);
        if (dz >= 3) {
          if (visited(z) < 1 || !walk_singleton(z)) continue;
          if (z < best_key) {
            best_key = z;
            best = {z};
          }
        } else if (dz == 2) {
          auto run_ = expand_run(z);
          if (*std::min_element(run_.begin(), run_.end()) != z) continue;
          if (!walk_chain(run_)) continue;
          if (z < best_key) {
            best_key = z;
            best = std::move(run_);
          }
        }
      }
      REQUIRE(best_key < g.n);
      for (Vertex z : best) removed[z] = 1;
      remaining -= (int)best.size();
      rkinds.push_back(best.size() == 1 ? GroupKind::Singleton : GroupKind::Chain);
      rgroups.push_back(std::move(best));
    }
    CanonicalOrdering out;
    out.groups.push_back({g.roots.v1, g.roots.v2});
    out.kinds.push_back(GroupKind::Chain);
    for (size_t i = rgroups.size(); i-- > 0;) {
      out.groups.push_back(std::move(rgroups[i]));
      out.kinds.push_back(rkinds[i]);
    }
    return out;
  }
};

// All ways to cut one permutation of the non-root vertices into consecutive
// groups, with kinds forced by the group sizes.
std::vector<CanonicalOrdering> all_orderings(const PlanarGraph& g) {
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < g.n; ++v)
    if (v != g.roots.v1 && v != g.roots.v2) rest.push_back(v);
  std::vector<CanonicalOrdering> out;
  std::sort(rest.begin(), rest.end());
  do {
    int cuts = (int)rest.size() - 1;
    for (int mask = 0; mask < (1 << cuts); ++mask) {
      CanonicalOrdering co;
      co.groups.push_back({g.roots.v1, g.roots.v2});
      co.kinds.push_back(GroupKind::Chain);
      std::vector<Vertex> cur{rest[0]};
      for (int i = 0; i < cuts; ++i) {
        if (mask & (1 << i)) {
          co.kinds.push_back(cur.size() == 1 ? GroupKind::Singleton : GroupKind::Chain);
          co.groups.push_back(std::move(cur));
          cur.clear();
        }
        cur.push_back(rest[i + 1]);
      }
      co.kinds.push_back(cur.size() == 1 ? GroupKind::Singleton : GroupKind::Chain);
      co.groups.push_back(std::move(cur));
      out.push_back(std::move(co));
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

}  // namespace

TEST_CASE("k4 frozen ordering") {
  PlanarGraph g = gen_tetrahedron();
  auto co = compute_canonical_ordering(g);
  CHECK(co.groups == std::vector<std::vector<Vertex>>{{0, 1}, {3}, {2}});
  CHECK(co.kinds ==
        std::vector<GroupKind>{GroupKind::Chain, GroupKind::Singleton, GroupKind::Singleton});
  auto en = enumerate_vertices(g, co);
  CHECK(en.idx == std::vector<int>{1, 2, 4, 3});
  CHECK(en.by_idx == std::vector<Vertex>{-1, 0, 1, 3, 2});
}

TEST_CASE("cube frozen ordering") {
  PlanarGraph g = gen_cube();
  auto co = compute_canonical_ordering(g);
  CHECK(co.groups == std::vector<std::vector<Vertex>>{{0, 1}, {3, 2}, {7, 6}, {5}, {4}});
  CHECK(co.kinds == std::vector<GroupKind>{GroupKind::Chain, GroupKind::Chain, GroupKind::Chain,
                                           GroupKind::Singleton, GroupKind::Singleton});
  auto en = enumerate_vertices(g, co);
  CHECK(en.idx == std::vector<int>{1, 2, 3, 4, 8, 7, 6, 5});
}

TEST_CASE("w5 with hub on top, frozen ordering and labels") {
  PlanarGraph g = w5_hub_top();
  auto co = compute_canonical_ordering(g);
  CHECK(co.groups == std::vector<std::vector<Vertex>>{{0, 1}, {3, 2}, {4}});
  auto en = enumerate_vertices(g, co);
  CHECK(en.idx == std::vector<int>{1, 2, 3, 4, 5});

  auto ann = label_edges(g, co, en);
  auto lab = [&](Vertex a, Vertex b) { return ann.label[g.dart_between(a, b)]; };
  CHECK(lab(0, 1) == Label::E);
  CHECK(lab(1, 0) == Label::W);
  CHECK(lab(0, 3) == Label::NE);
  CHECK(lab(3, 0) == Label::SW);
  CHECK(lab(1, 2) == Label::NW);
  CHECK(lab(2, 1) == Label::SE);
  CHECK(lab(3, 2) == Label::E);
  CHECK(lab(2, 3) == Label::W);
  CHECK(lab(1, 4) == Label::NW);
  CHECK(lab(4, 1) == Label::SE);
  CHECK(lab(2, 4) == Label::N);
  CHECK(lab(4, 2) == Label::S);
  CHECK(lab(3, 4) == Label::NE);
  CHECK(lab(4, 3) == Label::SW);
  CHECK(lab(4, 0) == Label::N);
  CHECK(lab(0, 4) == Label::S);

  CHECK(ann.parent[0] == -1);
  CHECK(ann.parent[1] == edge_of(g.dart_between(0, 1)));
  CHECK(ann.parent[2] == edge_of(g.dart_between(1, 2)));
  CHECK(ann.parent[3] == edge_of(g.dart_between(2, 3)));
  CHECK(ann.parent[4] == edge_of(g.dart_between(3, 4)));
}

TEST_CASE("k4 frozen labels and annotation fields") {
  PlanarGraph g = gen_tetrahedron();
  auto co = compute_canonical_ordering(g);
  auto en = enumerate_vertices(g, co);
  auto ann = label_edges(g, co, en);
  auto lab = [&](Vertex a, Vertex b) { return ann.label[g.dart_between(a, b)]; };
  CHECK(lab(0, 1) == Label::E);
  CHECK(lab(1, 0) == Label::W);
  CHECK(lab(0, 3) == Label::NE);
  CHECK(lab(3, 0) == Label::SW);
  CHECK(lab(1, 3) == Label::NW);
  CHECK(lab(3, 1) == Label::SE);
  CHECK(lab(1, 2) == Label::NW);
  CHECK(lab(2, 1) == Label::SE);
  CHECK(lab(3, 2) == Label::NE);
  CHECK(lab(2, 3) == Label::SW);
  CHECK(lab(2, 0) == Label::N);
  CHECK(lab(0, 2) == Label::S);

  // the anchor edge runs vn -> v1, everything else towards the larger index
  CHECK(ann.dir[edge_of(g.dart_between(0, 2))] == g.dart_between(2, 0));
  CHECK(ann.dir[edge_of(g.dart_between(0, 1))] == g.dart_between(0, 1));
  CHECK(ann.dir[edge_of(g.dart_between(2, 3))] == g.dart_between(3, 2));

  CHECK(ann.parent[0] == -1);
  CHECK(ann.parent[1] == edge_of(g.dart_between(0, 1)));
  CHECK(ann.parent[3] == edge_of(g.dart_between(1, 3)));
  CHECK(ann.parent[2] == edge_of(g.dart_between(2, 3)));

  CHECK(ann.first_out[0] == g.dart_between(0, 3));
  CHECK(ann.last_out[0] == g.dart_between(0, 1));
  CHECK(ann.nne[0] == g.dart_between(0, 3));
  CHECK(ann.nnw[1] == g.dart_between(1, 2));
  CHECK(ann.north[2] == g.dart_between(2, 0));
  CHECK(ann.north[0] == -1);
}

TEST_CASE("computed orderings validate and annotations are clean corpus-wide") {
  for (auto& [name, g] : cotree::test::small_corpus()) {
    CAPTURE(name);
    auto co = compute_canonical_ordering(g);
    auto rep = validate_canonical_ordering(g, co);
    for (auto& f : rep.findings) CAPTURE(f.check + " " + f.where + ": " + f.message);
    CHECK(rep.ok());
    auto en = enumerate_vertices(g, co);
    auto ann = label_edges(g, co, en);
    CHECK(check_annotation(g, en, ann).ok());
    CHECK(check_face_orientation(g, ann).ok());
    // deterministic: a second run reproduces the ordering exactly
    auto again = compute_canonical_ordering(g);
    CHECK(again.groups == co.groups);
  }
}

TEST_CASE("exhaustive search confirms the computed ordering is the unique valid one") {
  for (PlanarGraph g : {gen_tetrahedron(), w5_hub_top(), gen_wheel(5)}) {
    auto computed = compute_canonical_ordering(g);
    int valid = 0;
    for (const auto& cand : all_orderings(g)) {
      if (validate_canonical_ordering(g, cand).ok()) {
        valid++;
        CHECK(cand.groups == computed.groups);
      }
    }
    CHECK(valid == 1);
  }
}

TEST_CASE("reference peel agrees with the production peel") {
  for (auto& [name, g] : cotree::test::small_corpus()) {
    CAPTURE(name);
    auto fast = compute_canonical_ordering(g);
    auto slow = ReferencePeel(g).run();
    CHECK(fast.groups == slow.groups);
    CHECK(fast.kinds == slow.kinds);
  }
}

TEST_CASE("non-3-connected inputs are rejected by the peel") {
  // 4-cycle with a chord: {0,2} is a separating pair
  PlanarGraph chord = build_graph({{1, 2, 3}, {0, 2}, {3, 0, 1}, {0, 2}}, {3, 0, 1}, {0, 3, 1});
  CHECK(code_of([&] { compute_canonical_ordering(chord); }) == Err::NotThreeConnected);
  // K4 minus one edge
  PlanarGraph diamond = build_graph({{3, 1, 2}, {2, 0, 3}, {0, 1}, {1, 0}}, {2, 0, 3}, {0, 2, 3});
  CHECK(code_of([&] { compute_canonical_ordering(diamond); }) == Err::NotThreeConnected);
}

TEST_CASE("validator findings identify specific defects") {
  PlanarGraph g = gen_cube();
  auto co = compute_canonical_ordering(g);

  {  // reversed chain: the cover walk would cross the protected v2 -> v1 link
    auto bad = co;
    std::reverse(bad.groups[1].begin(), bad.groups[1].end());
    auto rep = validate_canonical_ordering(g, bad);
    CHECK_FALSE(rep.ok());
    CHECK(has_finding(rep, "anchor"));
  }
  {  // swapping two groups breaks the chain predecessor counts
    auto bad = co;
    std::swap(bad.groups[1], bad.groups[2]);
    auto rep = validate_canonical_ordering(g, bad);
    CHECK(has_finding(rep, "chain-end-preds"));
  }
  {  // dropping a vertex breaks the partition
    auto bad = co;
    bad.groups[1] = {3};
    bad.kinds[1] = GroupKind::Singleton;
    auto rep = validate_canonical_ordering(g, bad);
    CHECK(has_finding(rep, "partition"));
  }
  {  // a kind that contradicts the group size
    auto bad = co;
    bad.kinds[3] = GroupKind::Chain;
    auto rep = validate_canonical_ordering(g, bad);
    CHECK(has_finding(rep, "group-kind"));
  }
  {  // last group must be the top vertex
    PlanarGraph k4 = gen_tetrahedron();
    CanonicalOrdering bad;
    bad.groups = {{0, 1}, {2}, {3}};
    bad.kinds = {GroupKind::Chain, GroupKind::Singleton, GroupKind::Singleton};
    auto rep = validate_canonical_ordering(k4, bad);
    CHECK(has_finding(rep, "last-group"));
  }
}
