#include "cotree/canonical_order.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "ordering_util.hpp"

namespace cotree {

const char* label_name(Label l) {
  switch (l) {
    case Label::None: return "none";
    case Label::S: return "S";
    case Label::SW: return "SW";
    case Label::W: return "W";
    case Label::NW: return "NW";
    case Label::N: return "N";
    case Label::NE: return "NE";
    case Label::E: return "E";
    case Label::SE: return "SE";
  }
  return "?";
}

namespace {

// Top-down peeling. The current graph is g minus the removed vertices; its
// outer cycle C is a doubly linked list (nextC follows the outer-face orbit
// v1, vn, ..., v2). Interior faces of the current graph are faces of g;
// alive[f] marks them, outv[f]/oute[f] count boundary vertices/edges of f
// currently on C. A vertex or chain is removable exactly when the faces its
// removal exposes have the right counter shapes, so legality never needs a
// walk over anything but the dying faces.
struct Peel {
  const PlanarGraph& g;
  std::vector<char> removed, on_c, alive;
  std::vector<int> cur_deg, visited, outv, oute;
  std::vector<Vertex> nextC, prevC;
  std::set<Vertex> pending;
  std::vector<Vertex> dirty_buf;
  int remaining;

  struct Exposure {
    std::vector<FaceId> faces;  // interior faces that die
    std::vector<Dart> arc;      // new boundary darts, running u -> ... -> w
  };

  explicit Peel(const PlanarGraph& gg) : g(gg) {
    int n = g.n, nf = g.faces.count;
    removed.assign(n, 0);
    on_c.assign(n, 0);
    visited.assign(n, 0);
    cur_deg.resize(n);
    for (Vertex v = 0; v < n; ++v) cur_deg[v] = g.degree(v);
    alive.assign(nf, 1);
    alive[g.outer_face] = 0;
    outv.assign(nf, 0);
    oute.assign(nf, 0);
    nextC.assign(n, -1);
    prevC.assign(n, -1);
    auto cyc = g.outer_cycle();
    int L = (int)cyc.size();
    for (int i = 0; i < L; ++i) {
      Vertex v = cyc[i], w = cyc[(i + 1) % L];
      nextC[v] = w;
      prevC[w] = v;
      on_c[v] = 1;
    }
    for (Vertex v : cyc)
      for (Dart d : g.out_darts(v)) {
        FaceId f = g.faces.face_of[d];
        if (alive[f]) outv[f]++;
      }
    Dart d0 = g.faces.face_dart[g.outer_face], e = d0;
    do {
      FaceId f = g.faces.face_of[twin(e)];
      if (alive[f]) oute[f]++;
      e = g.face_next(e);
    } while (e != d0);
    remaining = n;
    for (Vertex v = 0; v < n; ++v)
      if (!is_root(v)) pending.insert(v);
  }

  bool is_root(Vertex v) const { return v == g.roots.v1 || v == g.roots.v2; }

  void mark_dirty(Vertex x) {
    if (x >= 0 && !removed[x] && !is_root(x)) dirty_buf.push_back(x);
  }

  // Smallest id on the maximal degree-2 run through z on C.
  Vertex run_min(Vertex z) const {
    Vertex best = z;
    for (Vertex x = prevC[z]; !is_root(x) && cur_deg[x] == 2; x = prevC[x]) best = std::min(best, x);
    for (Vertex x = nextC[z]; !is_root(x) && cur_deg[x] == 2; x = nextC[x]) best = std::min(best, x);
    return best;
  }

  std::vector<Vertex> expand_run(Vertex z) const {
    std::vector<Vertex> run{z};
    for (Vertex x = prevC[z]; !is_root(x) && cur_deg[x] == 2; x = prevC[x]) run.push_back(x);
    std::reverse(run.begin(), run.end());
    for (Vertex x = nextC[z]; !is_root(x) && cur_deg[x] == 2; x = nextC[x]) run.push_back(x);
    return run;
  }

  // Newly legal vertices are always rediscovered through dirty marks; a mark
  // on x also re-queues the minimum of any degree-2 run at or next to x, so
  // the ascending pop order always selects the smallest removable candidate.
  void flush_dirty() {
    for (Vertex x : dirty_buf) {
      if (removed[x] || is_root(x)) continue;
      pending.insert(x);
      if (!on_c[x]) continue;
      if (cur_deg[x] == 2) {
        pending.insert(run_min(x));
      } else {
        for (Vertex s : {prevC[x], nextC[x]})
          if (s >= 0 && on_c[s] && !removed[s] && !is_root(s) && cur_deg[s] == 2)
            pending.insert(run_min(s));
      }
    }
    dirty_buf.clear();
  }

  // Exposure walk for a single vertex z with current degree >= 3 (also used
  // for the forced first removal of vn). Visits the interior faces at z from
  // the prevC side to the nextC side; each must be alive and touch C either
  // only at z (1,0) or along exactly one boundary edge at z (2,1).
  bool walk_singleton(Vertex z, Exposure& out) {
    Vertex u = prevC[z], w = nextC[z];
    Dart d = g.dart_between(z, u);
    if (d < 0) return false;
    int guard = cur_deg[z] + 2;
    while (true) {
      if (--guard < 0) return false;
      FaceId f = g.faces.face_of[d];
      if (!alive[f]) return false;
      int ov = outv[f], oe = oute[f];
      if (!((ov == 1 && oe == 0) || (ov == 2 && oe == 1))) return false;
      out.faces.push_back(f);
      Dart e = g.face_next(d);
      while (g.head(e) != z) {
        out.arc.push_back(e);
        e = g.face_next(e);
      }
      if (g.tail(e) == w) break;
      d = twin(e);
    }
    for (size_t i = 0; i + 1 < out.arc.size(); ++i)
      if (on_c[g.head(out.arc[i])]) return false;
    return true;
  }

  // Exposure walk for a maximal degree-2 run (in nextC order). All members
  // share one interior face f; the run is removable when f touches C in
  // exactly the run plus its two attachments, with either one C-edge missing
  // from f (ordinary chain) or none missing while the whole graph has shrunk
  // to f's boundary (closing chain of the final cycle).
  bool walk_chain(const std::vector<Vertex>& run, Exposure& out) {
    Vertex z1 = run.front(), zl = run.back();
    Vertex u = prevC[z1], w = nextC[zl];
    int l = (int)run.size();
    for (Vertex x : run)
      if (visited[x] < 1) return false;
    Dart d0 = g.dart_between(z1, u);
    if (d0 < 0) return false;
    FaceId f = g.faces.face_of[d0];
    if (!alive[f]) return false;
    for (Vertex x : run) {
      Dart dx = g.dart_between(x, prevC[x]);
      if (dx < 0 || g.faces.face_of[dx] != f) return false;
    }
    if (outv[f] != l + 2) return false;
    int diff = outv[f] - oute[f];
    if (!(diff == 1 || (diff == 0 && remaining == l + 2))) return false;
    out.faces.push_back(f);
    std::unordered_set<Vertex> in_run(run.begin(), run.end());
    int guard = g.faces.face_size[f] + 1;
    Dart e = g.face_next(d0);
    while (true) {
      if (--guard < 0) return false;
      out.arc.push_back(e);
      if (g.head(e) == w) break;
      if (in_run.count(g.head(e))) return false;
      e = g.face_next(e);
    }
    for (size_t i = 0; i + 1 < out.arc.size(); ++i)
      if (on_c[g.head(out.arc[i])]) return false;
    return true;
  }

  void commit(const std::vector<Vertex>& members, const Exposure& ex) {
    for (FaceId f : ex.faces) {
      alive[f] = 0;
      Dart d0 = g.faces.face_dart[f], e = d0;
      do {
        Vertex t = g.tail(e);
        if (!removed[t] && on_c[t]) mark_dirty(t);
        e = g.face_next(e);
      } while (e != d0);
    }
    for (Vertex z : members) {
      removed[z] = 1;
      on_c[z] = 0;
      pending.erase(z);
    }
    remaining -= (int)members.size();
    for (Vertex z : members)
      for (Dart d : g.out_darts(z)) {
        Vertex x = g.head(d);
        if (removed[x]) continue;
        cur_deg[x]--;
        visited[x]++;
        mark_dirty(x);
      }
    for (size_t i = 0; i + 1 < ex.arc.size(); ++i) {
      Vertex x = g.head(ex.arc[i]);
      on_c[x] = 1;
      for (Dart d : g.out_darts(x)) {
        FaceId f = g.faces.face_of[d];
        if (alive[f]) outv[f]++;
      }
      mark_dirty(x);
    }
    for (Dart e : ex.arc) {
      FaceId f = g.faces.face_of[twin(e)];
      if (alive[f]) oute[f]++;
    }
    Vertex prev = g.tail(ex.arc.front());
    for (Dart e : ex.arc) {
      Vertex x = g.head(e);
      nextC[prev] = x;
      prevC[x] = prev;
      prev = x;
    }
    mark_dirty(g.tail(ex.arc.front()));
    mark_dirty(g.head(ex.arc.back()));
    flush_dirty();
  }

  CanonicalOrdering run() {
    std::vector<std::vector<Vertex>> rgroups;
    std::vector<GroupKind> rkinds;
    Vertex vn = g.roots.vn;
    {
      Exposure ex;
      if (!walk_singleton(vn, ex))
        throw GraphError(Err::NotThreeConnected, "top vertex is not removable");
      commit({vn}, ex);
      rgroups.push_back({vn});
      rkinds.push_back(GroupKind::Singleton);
    }
    while (remaining > 2) {
      if (pending.empty()) throw GraphError(Err::NotThreeConnected, "peeling is stuck");
      Vertex z = *pending.begin();
      pending.erase(pending.begin());
      if (removed[z] || !on_c[z]) continue;
      if (cur_deg[z] >= 3) {
        if (visited[z] < 1) continue;
        Exposure ex;
        if (!walk_singleton(z, ex)) continue;
        commit({z}, ex);
        rgroups.push_back({z});
        rkinds.push_back(GroupKind::Singleton);
      } else if (cur_deg[z] == 2) {
        auto run_ = expand_run(z);
        Vertex mn = *std::min_element(run_.begin(), run_.end());
        if (mn < z) {
          pending.insert(mn);
          continue;
        }
        Exposure ex;
        if (!walk_chain(run_, ex)) continue;
        commit(run_, ex);
        rkinds.push_back(run_.size() == 1 ? GroupKind::Singleton : GroupKind::Chain);
        rgroups.push_back(std::move(run_));
      }
    }
    if (!(on_c[g.roots.v1] && on_c[g.roots.v2] && nextC[g.roots.v1] == g.roots.v2 &&
          nextC[g.roots.v2] == g.roots.v1))
      throw GraphError(Err::InternalInvariantBroken, "peeling did not end at the base edge");
    CanonicalOrdering out;
    out.groups.reserve(rgroups.size() + 1);
    out.groups.push_back({g.roots.v1, g.roots.v2});
    out.kinds.push_back(GroupKind::Chain);
    for (size_t i = rgroups.size(); i-- > 0;) {
      out.groups.push_back(std::move(rgroups[i]));
      out.kinds.push_back(rkinds[i]);
    }
    return out;
  }
};

}  // namespace

namespace detail {

std::vector<int> group_index_of(const PlanarGraph& g, const CanonicalOrdering& co) {
  std::vector<int> gi(g.n, -1);
  for (int k = 0; k < (int)co.groups.size(); ++k)
    for (Vertex v : co.groups[k]) {
      if (v < 0 || v >= g.n || gi[v] != -1)
        throw GraphError(Err::InternalInvariantBroken, "ordering is not a partition");
      gi[v] = k;
    }
  for (Vertex v = 0; v < g.n; ++v)
    if (gi[v] == -1) throw GraphError(Err::InternalInvariantBroken, "ordering misses a vertex");
  return gi;
}

std::vector<Dart> incoming_block(const PlanarGraph& g, const std::vector<int>& gi, Vertex z) {
  auto darts = g.out_darts(z);
  int deg = (int)darts.size();
  auto earlier = [&](Dart d) { return gi[g.head(d)] < gi[z]; };
  int t = 0;
  for (Dart d : darts) t += earlier(d) ? 1 : 0;
  if (t < 2) return {};
  std::vector<Dart> block;
  if (t == deg) {
    Dart dv1 = g.dart_between(z, g.roots.v1);
    if (dv1 < 0) return {};
    Dart d = g.rot_next[dv1];
    for (int i = 0; i < deg; ++i, d = g.rot_next[d]) block.push_back(d);
  } else {
    int trans = 0;
    for (Dart d : darts) trans += earlier(d) != earlier(g.rot_next[d]) ? 1 : 0;
    if (trans != 2) return {};
    Dart start = -1;
    for (Dart d : darts)
      if (earlier(d) && !earlier(g.rot_prev[d])) start = d;
    for (Dart d = start; (int)block.size() < t; d = g.rot_next[d]) block.push_back(d);
  }
  return block;
}

Vertex chain_attach(const PlanarGraph& g, const std::vector<int>& gi, Vertex z) {
  Vertex a = -1;
  for (Dart d : g.out_darts(z)) {
    Vertex x = g.head(d);
    if (gi[x] < gi[z]) {
      if (a != -1) return -1;
      a = x;
    }
  }
  return a;
}

}  // namespace detail

using detail::chain_attach;
using detail::group_index_of;
using detail::incoming_block;

CanonicalOrdering compute_canonical_ordering(const PlanarGraph& g) {
  return Peel(g).run();
}

VertexEnumeration enumerate_vertices(const PlanarGraph& g, const CanonicalOrdering& co) {
  auto gi = group_index_of(g, co);
  VertexEnumeration en;
  en.idx.assign(g.n, 0);
  en.by_idx.assign(g.n + 1, -1);
  en.idx[g.roots.v1] = 1;
  en.idx[g.roots.v2] = 2;
  int s = 2;
  for (int k = 1; k < (int)co.groups.size(); ++k) {
    const auto& grp = co.groups[k];
    int l = (int)grp.size();
    if (l == 1) {
      en.idx[grp[0]] = s + 1;
    } else {
      Vertex a = chain_attach(g, gi, grp.front());
      Vertex b = chain_attach(g, gi, grp.back());
      if (a < 0 || b < 0 || en.idx[a] == 0 || en.idx[b] == 0)
        throw GraphError(Err::InternalInvariantBroken, "chain attachments are malformed");
      // Numbers ascend away from the attachment with the larger index, so the
      // sole predecessor of the chain's lowest member is its parent and the
      // chain's parent edges fall on first/last outgoing positions.
      bool left_to_right = en.idx[a] > en.idx[b];
      for (int j = 0; j < l; ++j) en.idx[grp[j]] = left_to_right ? s + 1 + j : s + l - j;
    }
    s += l;
  }
  for (Vertex v = 0; v < g.n; ++v) en.by_idx[en.idx[v]] = v;
  return en;
}

EdgeAnnotation orient_edges(const PlanarGraph& g, const VertexEnumeration& en) {
  EdgeAnnotation ann;
  int m = g.num_edges();
  ann.dir.assign(m, -1);
  ann.label.assign(g.num_darts(), Label::None);
  ann.parent.assign(g.n, -1);
  ann.first_out.assign(g.n, -1);
  ann.last_out.assign(g.n, -1);
  ann.nnw.assign(g.n, -1);
  ann.nne.assign(g.n, -1);
  ann.north.assign(g.n, -1);
  Dart anchor = g.dart_between(g.roots.vn, g.roots.v1);
  if (anchor < 0) throw GraphError(Err::InternalInvariantBroken, "missing v1-vn edge");
  for (EdgeId e = 0; e < m; ++e) {
    Dart d = 2 * e;
    ann.dir[e] = en.idx[g.tail(d)] < en.idx[g.head(d)] ? d : twin(d);
  }
  ann.dir[edge_of(anchor)] = anchor;
  for (Vertex v = 0; v < g.n; ++v) {
    int best = 0;
    for (Dart d : g.out_darts(v)) {
      EdgeId e = edge_of(d);
      if (ann.dir[e] == twin(d)) {  // directed into v
        Vertex x = g.head(d);
        if (en.idx[x] > best) {
          best = en.idx[x];
          ann.parent[v] = e;
        }
      }
    }
  }
  ann.parent[g.roots.v1] = -1;
  for (Vertex v = 0; v < g.n; ++v) {
    auto darts = g.out_darts(v);
    int trans = 0;
    for (Dart d : darts) {
      bool o1 = ann.dir[edge_of(d)] == d;
      bool o2 = ann.dir[edge_of(g.rot_next[d])] == g.rot_next[d];
      trans += o1 != o2 ? 1 : 0;
    }
    if (trans != 2) continue;  // left unset; check_annotation reports this
    for (Dart d : darts) {
      bool out = ann.dir[edge_of(d)] == d;
      if (out && ann.dir[edge_of(g.rot_prev[d])] != g.rot_prev[d]) ann.first_out[v] = d;
      if (out && ann.dir[edge_of(g.rot_next[d])] != g.rot_next[d]) ann.last_out[v] = d;
    }
  }
  return ann;
}

EdgeAnnotation label_edges(const PlanarGraph& g, const CanonicalOrdering& co,
                           const VertexEnumeration& en) {
  auto gi = group_index_of(g, co);
  EdgeAnnotation ann = orient_edges(g, en);
  int K = (int)co.groups.size();
  auto put = [&](Dart d, Label at_tail, Label at_head) {
    ann.label[d] = at_tail;
    ann.label[twin(d)] = at_head;
  };
  {
    Dart d = g.dart_between(g.roots.v1, g.roots.v2);
    if (d < 0) throw GraphError(Err::InternalInvariantBroken, "missing base edge");
    put(d, Label::E, Label::W);
  }
  for (int k = 1; k < K; ++k) {
    const auto& grp = co.groups[k];
    if (grp.size() == 1) {
      Vertex z = grp[0];
      auto block = incoming_block(g, gi, z);
      if (block.empty())
        throw GraphError(Err::InternalInvariantBroken, "singleton block is malformed");
      if (k == K - 1) block.pop_back();  // the dart to v1 is the N-edge, not part of the fan
      for (size_t i = 0; i < block.size(); ++i) {
        Label at_z = i == 0 ? Label::SE : (i + 1 == block.size() ? Label::SW : Label::S);
        Label at_nbr = at_z == Label::SE ? Label::NW : (at_z == Label::SW ? Label::NE : Label::N);
        put(block[i], at_z, at_nbr);
      }
      if (k == K - 1) put(g.dart_between(z, g.roots.v1), Label::N, Label::S);
    } else {
      Vertex a = chain_attach(g, gi, grp.front());
      Vertex b = chain_attach(g, gi, grp.back());
      if (a < 0 || b < 0) throw GraphError(Err::InternalInvariantBroken, "chain attachments");
      put(g.dart_between(grp.front(), a), Label::SW, Label::NE);
      put(g.dart_between(grp.back(), b), Label::SE, Label::NW);
      for (size_t j = 0; j + 1 < grp.size(); ++j) {
        Dart d = g.dart_between(grp[j], grp[j + 1]);
        if (d < 0) throw GraphError(Err::InternalInvariantBroken, "chain is not a path");
        put(d, Label::E, Label::W);
      }
    }
  }
  ann.has_labels = true;
  for (Vertex v = 0; v < g.n; ++v) {
    if (ann.first_out[v] < 0) continue;
    Dart d = ann.first_out[v];
    while (true) {
      if (ann.dir[edge_of(d)] == d) {
        if (ann.label[d] == Label::NW) ann.nnw[v] = d;  // last one in block order wins
        if (ann.label[d] == Label::NE && ann.nne[v] < 0) ann.nne[v] = d;
        if (ann.label[d] == Label::N) ann.north[v] = d;
      }
      if (d == ann.last_out[v]) break;
      d = g.rot_next[d];
    }
  }
  return ann;
}

ValidationReport check_face_orientation(const PlanarGraph& g, const EdgeAnnotation& ann) {
  ValidationReport rep;
  Dart anchor = g.dart_between(g.roots.vn, g.roots.v1);
  FaceId fa = g.left_face(anchor), fb = g.right_face(anchor);
  for (FaceId f = 0; f < g.faces.count; ++f) {
    auto orbit = g.face_orbit(f);
    int L = (int)orbit.size(), trans = 0;
    for (int i = 0; i < L; ++i) {
      bool s1 = ann.dir[edge_of(orbit[i])] == orbit[i];
      bool s2 = ann.dir[edge_of(orbit[(i + 1) % L])] == orbit[(i + 1) % L];
      trans += s1 != s2 ? 1 : 0;
    }
    int want = (f == fa || f == fb) ? 0 : 2;
    if (trans != want)
      rep.add("face-orientation", "face " + std::to_string(f),
              "boundary splits into " + std::to_string(trans) +
                  " direction changes, expected " + std::to_string(want));
  }
  return rep;
}

ValidationReport check_annotation(const PlanarGraph& g, const VertexEnumeration& en,
                                  const EdgeAnnotation& ann) {
  ValidationReport rep;
  int m = g.num_edges();
  Dart anchor = g.dart_between(g.roots.vn, g.roots.v1);
  EdgeId anchor_edge = edge_of(anchor);
  for (EdgeId e = 0; e < m; ++e) {
    Dart d = ann.dir[e];
    if (d != 2 * e && d != 2 * e + 1) {
      rep.add("dir-valid", "edge " + std::to_string(e), "direction dart does not belong to edge");
      continue;
    }
    if (e == anchor_edge) {
      if (d != anchor)
        rep.add("dir-root-exception", "edge " + std::to_string(e),
                "the v1-vn edge must be directed vn -> v1");
    } else if (en.idx[g.tail(d)] >= en.idx[g.head(d)]) {
      rep.add("dir-monotone", "edge " + std::to_string(e),
              "edge is not directed towards the larger index");
    }
  }
  static const int rank[] = {-1, 0, 1, 2, 3, 4, 5, 6, 7};  // indexed by Label
  for (Vertex v = 0; v < g.n; ++v) {
    auto darts = g.out_darts(v);
    int deg = (int)darts.size();
    std::string where = "vertex " + std::to_string(v);
    int counts[9] = {0};
    bool total = true;
    for (Dart d : darts) {
      counts[(int)ann.label[d]]++;
      if (ann.label[d] == Label::None) total = false;
    }
    if (!total) {
      rep.add("label-total", where, "vertex has an unlabelled dart");
      continue;
    }
    for (Label l : {Label::SW, Label::W, Label::N, Label::E, Label::SE})
      if (counts[(int)l] > 1)
        rep.add("label-multiplicity", where,
                std::string("label ") + label_name(l) + " appears more than once");
    if (counts[(int)Label::W] && counts[(int)Label::SW])
      rep.add("label-exclusion", where, "vertex has both a W and a SW label");
    if (counts[(int)Label::E] && counts[(int)Label::SE])
      rep.add("label-exclusion", where, "vertex has both an E and a SE label");
    int descents = 0;
    for (int i = 0; i < deg; ++i) {
      int r1 = rank[(int)ann.label[darts[i]]];
      int r2 = rank[(int)ann.label[darts[(i + 1) % deg]]];
      if (r1 > r2) descents++;
    }
    if (descents > 1)
      rep.add("label-grammar", where, "labels are not in clockwise compass order");
    // in/out contiguity plus the bipolar property, with the v1-vn edge
    // counted as running v1 -> vn
    int ins = 0, outs = 0, trans = 0;
    for (int i = 0; i < deg; ++i) {
      bool o1 = ann.dir[edge_of(darts[i])] == darts[i];
      bool o2 = ann.dir[edge_of(darts[(i + 1) % deg])] == darts[(i + 1) % deg];
      (o1 ? outs : ins)++;
      trans += o1 != o2 ? 1 : 0;
    }
    if (ins == 0 || outs == 0)
      rep.add("in-out-intervals", where, "vertex lacks an incoming or outgoing edge");
    else if (trans != 2)
      rep.add("in-out-intervals", where, "incoming darts are not a contiguous interval");
    else {
      Dart first = -1, last = -1;
      for (Dart d : darts) {
        bool out = ann.dir[edge_of(d)] == d;
        if (out && ann.dir[edge_of(g.rot_prev[d])] != g.rot_prev[d]) first = d;
        if (out && ann.dir[edge_of(g.rot_next[d])] != g.rot_next[d]) last = d;
      }
      if (first != ann.first_out[v] || last != ann.last_out[v])
        rep.add("first-last-out", where, "recorded outgoing interval bounds are wrong");
    }
    bool effective_in = false, effective_out = false;
    for (Dart d : darts) {
      Dart eff = edge_of(d) == anchor_edge ? twin(anchor) : ann.dir[edge_of(d)];
      (eff == d ? effective_out : effective_in) = true;
    }
    if (v == g.roots.v1 ? effective_in : !effective_in)
      rep.add("bipolar", where, v == g.roots.v1 ? "v1 must be the unique source"
                                                : "vertex needs an incoming edge besides at v1");
    if (v == g.roots.vn ? effective_out : !effective_out)
      rep.add("bipolar", where, v == g.roots.vn ? "vn must be the unique sink"
                                                : "vertex needs an outgoing edge besides at vn");
  }
  for (Vertex v = 0; v < g.n; ++v) {
    std::string where = "vertex " + std::to_string(v);
    if (v == g.roots.v1) {
      if (ann.parent[v] != -1) rep.add("parent-root", where, "v1 must not have a parent edge");
      continue;
    }
    EdgeId p = ann.parent[v];
    if (p < 0 || p >= m) {
      rep.add("parent-missing", where, "vertex has no parent edge");
      continue;
    }
    Dart pd = ann.dir[p];
    if (g.head(pd) != v) {
      rep.add("parent-incoming", where, "parent edge is not directed into the vertex");
      continue;
    }
    if (p == anchor_edge) rep.add("parent-anchor", where, "the v1-vn edge is never a parent edge");
    int best = 0;
    for (Dart d : g.out_darts(v))
      if (ann.dir[edge_of(d)] == twin(d)) best = std::max(best, en.idx[g.head(d)]);
    if (en.idx[g.tail(pd)] != best)
      rep.add("parent-max", where, "parent edge does not come from the largest-index neighbour");
    if (ann.has_labels) {
      Vertex t = g.tail(pd);
      Label l = ann.label[pd];
      bool first_ok = pd == ann.first_out[t] && (l == Label::W || l == Label::NW || l == Label::N);
      bool last_ok = pd == ann.last_out[t] && (l == Label::E || l == Label::NE || l == Label::N);
      if (!first_ok && !last_ok)
        rep.add("parent-lemma", where,
                "parent edge is neither a first outgoing {W,NW,N} nor a last outgoing {E,NE,N}");
    }
  }
  return rep;
}

namespace {

// Incremental boundary simulation shared by the validator: inserts one group,
// reporting any definition violation. Returns false when the boundary state
// is too broken to continue.
struct BoundarySim {
  const PlanarGraph& g;
  ValidationReport& rep;
  std::vector<Vertex> nextC, prevC;
  std::vector<char> on_c;
  std::vector<int> mid_pos;

  BoundarySim(const PlanarGraph& gg, ValidationReport& r) : g(gg), rep(r) {
    nextC.assign(g.n, -1);
    prevC.assign(g.n, -1);
    on_c.assign(g.n, 0);
    mid_pos.assign(g.n, -1);
    link(g.roots.v1, g.roots.v2);
    link(g.roots.v2, g.roots.v1);
    on_c[g.roots.v1] = on_c[g.roots.v2] = 1;
  }

  void link(Vertex a, Vertex b) {
    nextC[a] = b;
    prevC[b] = a;
  }

  bool is_anchor(Vertex a, Vertex b) const { return a == g.roots.v2 && b == g.roots.v1; }

  // Walk clockwise from a to b along the current boundary, collecting the
  // covered vertices strictly between them. The earlier neighbours in mids
  // must appear along the walk in that order; other covered vertices simply
  // become interior. Fails when the walk would traverse the v2 -> v1 link,
  // since the v1-v2 edge has to stay on the outer face of every prefix.
  bool cover_walk(Vertex a, Vertex b, const std::vector<Vertex>& mids, const std::string& where,
                  const char* finding, std::vector<Vertex>& covered) {
    for (size_t i = 0; i < mids.size(); ++i) mid_pos[mids[i]] = (int)i;
    bool ok = false;
    size_t want = 0;
    Vertex x = a;
    int guard = g.n + 1;
    while (true) {
      if (is_anchor(x, nextC[x])) {
        rep.add("anchor", where, "covered arc would traverse the v2 -> v1 link");
        break;
      }
      x = nextC[x];
      if (x == b) {
        if (want == mids.size()) ok = true;
        else rep.add(finding, where, "an earlier neighbour is missing from the covered arc");
        break;
      }
      if (x < 0 || --guard <= 0) {
        rep.add(finding, where, "boundary walk never reaches the far attachment");
        break;
      }
      covered.push_back(x);
      if (mid_pos[x] == (int)want) {
        want++;
      } else if (mid_pos[x] >= 0) {
        rep.add(finding, where, "earlier neighbours are out of clockwise order on the boundary");
        break;
      }
    }
    for (Vertex v : mids) mid_pos[v] = -1;
    return ok;
  }

  bool add_singleton(const std::vector<int>& gi, int k, Vertex z, std::string where) {
    auto block = incoming_block(g, gi, z);
    if (block.empty()) {
      int t = 0;
      for (Dart d : g.out_darts(z)) t += gi[g.head(d)] < k ? 1 : 0;
      rep.add(t < 2 ? "singleton-preds" : "singleton-contiguity", where,
              t < 2 ? "singleton needs at least two earlier neighbours"
                    : "earlier neighbours are not a contiguous clockwise block");
      return false;
    }
    Vertex a = g.head(block.back()), b = g.head(block.front());
    for (Dart d : block)
      if (!on_c[g.head(d)]) {
        rep.add("attach-on-boundary", where, "earlier neighbour is not on the current boundary");
        return false;
      }
    std::vector<Vertex> mids;
    for (int i = (int)block.size() - 2; i >= 1; --i) mids.push_back(g.head(block[i]));
    std::vector<Vertex> covered;
    if (!cover_walk(a, b, mids, where, "singleton-cover", covered)) return false;
    for (Vertex v : covered) on_c[v] = 0;
    link(a, z);
    link(z, b);
    on_c[z] = 1;
    return true;
  }

  bool add_chain(const std::vector<int>& gi, int k, const std::vector<Vertex>& grp,
                 std::string where) {
    for (size_t j = 0; j + 1 < grp.size(); ++j)
      if (g.dart_between(grp[j], grp[j + 1]) < 0) {
        rep.add("chain-path", where, "consecutive chain vertices are not adjacent");
        return false;
      }
    for (size_t i = 0; i < grp.size(); ++i) {
      int earlier = 0, within = 0;
      for (Dart d : g.out_darts(grp[i])) {
        Vertex x = g.head(d);
        if (gi[x] < k) earlier++;
        if (gi[x] == k) {
          within++;
          bool consecutive = (i > 0 && x == grp[i - 1]) || (i + 1 < grp.size() && x == grp[i + 1]);
          if (!consecutive) {
            rep.add("chain-induced", where, "chain has an edge between non-consecutive members");
            return false;
          }
        }
      }
      bool end = i == 0 || i + 1 == grp.size();
      if (end && earlier != 1) {
        rep.add("chain-end-preds", where, "chain end needs exactly one earlier neighbour");
        return false;
      }
      if (!end && earlier != 0) {
        rep.add("chain-interior-preds", where, "chain interior vertex has an earlier neighbour");
        return false;
      }
      (void)within;
    }
    Vertex a = chain_attach(g, gi, grp.front());
    Vertex b = chain_attach(g, gi, grp.back());
    if (!on_c[a] || !on_c[b]) {
      rep.add("attach-on-boundary", where, "chain attachment is not on the current boundary");
      return false;
    }
    if (a == b) {
      rep.add("chain-attach", where, "chain attachments coincide, so the prefix has a cutvertex");
      return false;
    }
    std::vector<Vertex> covered;
    if (!cover_walk(a, b, {}, where, "chain-cover", covered)) return false;
    for (Vertex v : covered) on_c[v] = 0;
    Vertex prev = a;
    for (Vertex z : grp) {
      link(prev, z);
      on_c[z] = 1;
      prev = z;
    }
    link(prev, b);
    return true;
  }
};

// Brute-force prefix checks: 2-connectivity by vertex deletion, and an
// outer-face retrace of the induced embedding against the simulated boundary.
struct PrefixOracle {
  const PlanarGraph& g;
  std::vector<char> present;
  std::vector<Vertex> members;

  explicit PrefixOracle(const PlanarGraph& gg) : g(gg), present(gg.n, 0) {}

  void add(const std::vector<Vertex>& grp) {
    for (Vertex v : grp) {
      present[v] = 1;
      members.push_back(v);
    }
  }

  bool connected_without(Vertex skip) const {
    Vertex start = -1;
    int want = 0;
    for (Vertex v : members)
      if (v != skip) {
        want++;
        start = v;
      }
    if (want == 0) return true;
    std::vector<char> seen(g.n, 0);
    std::vector<Vertex> stack{start};
    seen[start] = 1;
    int got = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Dart d : g.out_darts(v)) {
        Vertex x = g.head(d);
        if (x == skip || !present[x] || seen[x]) continue;
        seen[x] = 1;
        got++;
        stack.push_back(x);
      }
    }
    return got == want;
  }

  bool two_connected() const {
    if (members.size() == 2)
      return g.dart_between(g.roots.v1, g.roots.v2) >= 0;
    if (!connected_without(-1)) return false;
    for (Vertex v : members)
      if (!connected_without(v)) return false;
    return true;
  }

  // Trace the induced face left of (v2 -> v1) and return its tails.
  std::vector<Vertex> outer_trace() const {
    std::vector<std::vector<Vertex>> rot(g.n);
    std::vector<std::unordered_map<Vertex, int>> pos(g.n);
    for (Vertex v : members)
      for (Dart d : g.out_darts(v)) {
        Vertex x = g.head(d);
        if (present[x]) {
          pos[v].emplace(x, (int)rot[v].size());
          rot[v].push_back(x);
        }
      }
    std::vector<Vertex> tails;
    Vertex u = g.roots.v2, w = g.roots.v1;
    size_t guard = 2 * members.size() * members.size() + 4;
    do {
      tails.push_back(u);
      auto it = pos[w].find(u);
      if (it == pos[w].end()) return {};
      Vertex x = rot[w][(it->second + 1) % rot[w].size()];
      u = w;
      w = x;
      if (tails.size() > guard) return {};
    } while (!(u == g.roots.v2 && w == g.roots.v1));
    return tails;
  }
};

}  // namespace

ValidationReport validate_canonical_ordering(const PlanarGraph& g, const CanonicalOrdering& co,
                                             int brute_gate) {
  ValidationReport rep;
  int K = (int)co.groups.size();
  if ((int)co.kinds.size() != K) {
    rep.add("shape", "ordering", "kinds and groups differ in length");
    return rep;
  }
  if (K < 2) {
    rep.add("shape", "ordering", "ordering needs at least the base group and the top vertex");
    return rep;
  }
  std::vector<int> gi(g.n, -1);
  int covered = 0;
  for (int k = 0; k < K; ++k) {
    if (co.groups[k].empty()) rep.add("shape", "group " + std::to_string(k + 1), "group is empty");
    for (Vertex v : co.groups[k]) {
      if (v < 0 || v >= g.n || gi[v] != -1) {
        rep.add("partition", "group " + std::to_string(k + 1),
                "vertex " + std::to_string(v) + " is out of range or repeated");
        return rep;
      }
      gi[v] = k;
      covered++;
    }
  }
  if (covered != g.n) {
    rep.add("partition", "ordering", "groups do not cover every vertex");
    return rep;
  }
  if (co.groups[0] != std::vector<Vertex>{g.roots.v1, g.roots.v2})
    rep.add("base-group", "group 1", "first group must be exactly {v1, v2}");
  if (co.groups[K - 1] != std::vector<Vertex>{g.roots.vn})
    rep.add("last-group", "group " + std::to_string(K), "last group must be exactly {vn}");
  for (int k = 0; k < K; ++k) {
    GroupKind want = co.groups[k].size() == 1 ? GroupKind::Singleton : GroupKind::Chain;
    if (co.kinds[k] != want)
      rep.add("group-kind", "group " + std::to_string(k + 1),
              "kind does not match the group size");
  }
  if (!rep.ok()) return rep;
  for (Vertex v = 0; v < g.n; ++v) {
    if (gi[v] == K - 1) continue;
    bool later = false;
    for (Dart d : g.out_darts(v)) later = later || gi[g.head(d)] > gi[v];
    if (!later)
      rep.add("later-neighbour", "vertex " + std::to_string(v),
              "vertex has no neighbour in a later group");
  }
  BoundarySim sim(g, rep);
  bool brute = g.n <= brute_gate;
  PrefixOracle oracle(g);
  if (brute) oracle.add(co.groups[0]);
  for (int k = 1; k < K; ++k) {
    std::string where = "group " + std::to_string(k + 1);
    bool ok = co.groups[k].size() == 1 ? sim.add_singleton(gi, k, co.groups[k][0], where)
                                       : sim.add_chain(gi, k, co.groups[k], where);
    if (!ok) return rep;
    if (brute) {
      oracle.add(co.groups[k]);
      if (!oracle.two_connected()) {
        rep.add("prefix-two-connected", where, "prefix graph is not 2-connected");
        return rep;
      }
      auto tails = oracle.outer_trace();
      std::vector<Vertex> simc{g.roots.v2, g.roots.v1};
      for (Vertex x = sim.nextC[g.roots.v1]; x != g.roots.v2; x = sim.nextC[x]) simc.push_back(x);
      if (tails != simc) {
        rep.add("prefix-outer-face", where,
                "outer face of the embedded prefix does not match the simulated boundary");
        return rep;
      }
    }
  }
  auto cyc = g.outer_cycle();
  std::vector<Vertex> simc{g.roots.v1};
  for (Vertex x = sim.nextC[g.roots.v1]; x != g.roots.v1; x = sim.nextC[x]) {
    simc.push_back(x);
    if (simc.size() > cyc.size() + 1) break;
  }
  if (simc != cyc)
    rep.add("final-outer-face", "ordering",
            "completed boundary does not equal the outer face of the graph");
  return rep;
}

}  // namespace cotree
