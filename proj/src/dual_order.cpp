#include "cotree/dual_order.hpp"

#include "ordering_util.hpp"

namespace cotree {

DualCanonicalOrdering dual_canonical_ordering(const PlanarGraph& g, const CanonicalOrdering& co,
                                              const DualGraph& dg) {
  auto gi = detail::group_index_of(g, co);
  int K = (int)co.groups.size();
  Dart anchor = g.dart_between(g.roots.vn, g.roots.v1);
  Dart base = g.dart_between(g.roots.v1, g.roots.v2);
  if (anchor < 0 || base < 0)
    throw GraphError(Err::InternalInvariantBroken, "missing root edges");
  FaceId f1 = g.outer_face, f2 = g.left_face(anchor), fphi = g.left_face(base);
  if (dg.graph.roots.v1 != f1 || dg.graph.roots.v2 != f2 || dg.graph.roots.vn != fphi)
    throw GraphError(Err::InternalInvariantBroken, "dual roots disagree with the primal roots");

  DualCanonicalOrdering out;
  std::vector<char> placed(g.faces.count, 0);
  auto place = [&](std::vector<FaceId> grp, int primal_k) {
    for (FaceId f : grp) {
      if (f < 0 || f >= g.faces.count || placed[f])
        throw GraphError(Err::InternalInvariantBroken, "face placed twice in the dual ordering");
      placed[f] = 1;
    }
    out.ordering.kinds.push_back(grp.size() == 1 ? GroupKind::Singleton : GroupKind::Chain);
    out.ordering.groups.push_back(std::move(grp));
    out.primal_group.push_back(primal_k);
  };

  place({f1, f2}, 0);
  // Primal group k (k = K..2) contributes the faces its removal step exposes,
  // read clockwise; they form dual group K - k + 2.
  for (int kk = K - 1; kk >= 1; --kk) {
    const auto& grp = co.groups[kk];
    std::vector<FaceId> faces;
    if (grp.size() == 1) {
      auto block = detail::incoming_block(g, gi, grp[0]);
      if (block.empty())
        throw GraphError(Err::InternalInvariantBroken, "singleton block is malformed");
      if (kk == K - 1) block.pop_back();  // the corner at the v1 dart is f2, already placed
      for (size_t i = 1; i < block.size(); ++i) faces.push_back(g.left_face(block[i]));
    } else {
      Vertex a = detail::chain_attach(g, gi, grp.front());
      Dart d = a < 0 ? -1 : g.dart_between(grp.front(), a);
      if (d < 0) throw GraphError(Err::InternalInvariantBroken, "chain attachment is malformed");
      faces.push_back(g.left_face(d));
    }
    place(std::move(faces), kk + 1);
  }
  for (FaceId f = 0; f < g.faces.count; ++f)
    if (!placed[f])
      throw GraphError(Err::InternalInvariantBroken, "face missing from the dual ordering");
  if (out.ordering.groups.back() != std::vector<FaceId>{fphi})
    throw GraphError(Err::InternalInvariantBroken,
                     "dual ordering does not end at the face of the base edge");
  return out;
}

namespace {

enum class EdgeClass { Intra, S, SW, SE, Bad };

EdgeClass classify(const EdgeAnnotation& ann, EdgeId e) {
  Dart d = ann.dir[e];
  Label lt = ann.label[d], lh = ann.label[twin(d)];
  if ((lt == Label::E && lh == Label::W) || (lt == Label::W && lh == Label::E))
    return EdgeClass::Intra;
  if (lt == Label::N && lh == Label::S) return EdgeClass::S;
  if (lt == Label::NE && lh == Label::SW) return EdgeClass::SW;
  if (lt == Label::NW && lh == Label::SE) return EdgeClass::SE;
  return EdgeClass::Bad;
}

}  // namespace

ValidationReport verify_label_correspondence(const PlanarGraph& g, const EdgeAnnotation& ann,
                                             const DualGraph& dg, const EdgeAnnotation& dual_ann) {
  ValidationReport rep;
  (void)dg;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    std::string where = "edge " + std::to_string(e);
    EdgeClass pc = classify(ann, e), dc = classify(dual_ann, e);
    if (pc == EdgeClass::Bad || dc == EdgeClass::Bad) {
      rep.add("label-pair", where, "edge labels are not a valid head/tail pair");
      continue;
    }
    if (pc == EdgeClass::Intra && dc != EdgeClass::S)
      rep.add("corr-intra", where, "intra edge whose dual is not an S-edge");
    if (pc == EdgeClass::S && dc != EdgeClass::Intra)
      rep.add("corr-s", where, "S-edge whose dual is not an intra edge");
    if (pc == EdgeClass::SW) {
      if (dc != EdgeClass::SE)
        rep.add("corr-sw", where, "SW-edge whose dual is not an SE-edge");
      else if (dual_ann.dir[e] != ann.dir[e])
        rep.add("corr-sw-dir", where, "dual of an SW-edge must run left face to right face");
    }
    if (pc == EdgeClass::SE) {
      if (dc != EdgeClass::SW)
        rep.add("corr-se", where, "SE-edge whose dual is not an SW-edge");
      else if (dual_ann.dir[e] != twin(ann.dir[e]))
        rep.add("corr-se-dir", where, "dual of an SE-edge must run right face to left face");
    }
  }
  return rep;
}

}  // namespace cotree
