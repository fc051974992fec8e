#include "cotree/json_io.hpp"

#include <fstream>
#include <sstream>

namespace cotree {

json graph_to_json(const PlanarGraph& g) {
  json j;
  j["n"] = g.n;
  j["rotations"] = g.rotation_system();
  j["outer"] = g.outer_cycle();
  j["roots"] = {g.roots.v1, g.roots.v2, g.roots.vn};
  return j;
}

PlanarGraph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("rotations") || !j.contains("outer") ||
      !j.contains("roots"))
    throw GraphError(Err::BadInput, "graph json needs n, rotations, outer and roots");
  if (!j["n"].is_number_integer() || !j["rotations"].is_array() || !j["outer"].is_array() ||
      !j["roots"].is_array() || j["roots"].size() != 3 || j["outer"].size() < 3)
    throw GraphError(Err::BadInput, "graph json field has the wrong shape");
  int n = j["n"].get<int>();
  if (n < 3 || (int)j["rotations"].size() != n)
    throw GraphError(Err::BadInput, "rotations must list every vertex");
  std::vector<std::vector<Vertex>> rot(n);
  for (int v = 0; v < n; ++v) {
    const auto& r = j["rotations"][v];
    if (!r.is_array()) throw GraphError(Err::BadInput, "rotation entry is not a list");
    for (const auto& x : r) {
      if (!x.is_number_integer() || x.get<int>() < 0 || x.get<int>() >= n)
        throw GraphError(Err::BadInput, "neighbour id out of range");
      rot[v].push_back(x.get<int>());
    }
  }
  auto vert = [&](const json& x) {
    if (!x.is_number_integer() || x.get<int>() < 0 || x.get<int>() >= n)
      throw GraphError(Err::BadInput, "vertex id out of range");
    return (Vertex)x.get<int>();
  };
  std::vector<Vertex> w = {vert(j["outer"][0]), vert(j["outer"][1]), vert(j["outer"][2])};
  Roots roots{vert(j["roots"][0]), vert(j["roots"][1]), vert(j["roots"][2])};
  return build_graph(rot, w, roots);
}

static const char* kind_name(GroupKind k) {
  return k == GroupKind::Chain ? "chain" : "singleton";
}

json ordering_to_json(const CanonicalOrdering& co, const VertexEnumeration& en) {
  json j;
  j["groups"] = co.groups;
  json kinds = json::array();
  for (GroupKind k : co.kinds) kinds.push_back(kind_name(k));
  j["kinds"] = std::move(kinds);
  j["idx"] = en.idx;
  return j;
}

json dual_order_to_json(const CanonicalOrdering& co, const VertexEnumeration& en,
                        const DualCanonicalOrdering& dco, const VertexEnumeration& dual_en) {
  json j;
  j["primal"] = ordering_to_json(co, en);
  j["dual"] = ordering_to_json(dco.ordering, dual_en);
  j["dual"]["primal_group"] = dco.primal_group;
  return j;
}

json labels_to_json(const PlanarGraph& g, const EdgeAnnotation& ann) {
  json edges = json::array();
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    Vertex u = g.tail(2 * e), v = g.head(2 * e);
    json row;
    row["u"] = u;
    row["v"] = v;
    row["dir"] = ann.dir[e] == 2 * e ? "u->v" : "v->u";
    row["label_at_u"] = label_name(ann.label[2 * e]);
    row["label_at_v"] = label_name(ann.label[2 * e + 1]);
    Vertex hd = g.head(ann.dir[e]);
    row["parent_of"] = ann.parent[hd] == e ? hd : -1;
    edges.push_back(std::move(row));
  }
  json j;
  j["edges"] = std::move(edges);
  return j;
}

json tree_to_json(const PlanarGraph& g, const SpanningTreePair& t) {
  json j;
  json tr = json::array();
  for (EdgeId e : t.tree_edges) tr.push_back({g.tail(2 * e), g.head(2 * e)});
  json co = json::array();
  for (EdgeId e : t.cotree_edges) co.push_back({g.left_face(2 * e), g.right_face(2 * e)});
  j["tree"] = std::move(tr);
  j["cotree"] = std::move(co);
  j["max_deg_tree"] = t.max_deg_tree;
  j["max_deg_cotree"] = t.max_deg_cotree;
  return j;
}

json walk_to_json(const Walk& w) {
  json j;
  j["walk"] = w.verts;
  j["max_vertex_visits"] = w.max_vertex_visits;
  j["max_face_visits"] = w.max_face_visits;
  return j;
}

json report_to_json(const ValidationReport& r) {
  json j;
  j["ok"] = r.ok();
  json fs = json::array();
  for (const Finding& f : r.findings)
    fs.push_back({{"check", f.check}, {"where", f.where}, {"message", f.message}});
  j["findings"] = std::move(fs);
  return j;
}

std::string graph_to_dot(const PlanarGraph& g, const EdgeAnnotation* ann,
                         const SpanningTreePair* tree, const HSubgraph* h) {
  std::vector<char> in_t(g.num_edges(), 0);
  if (tree)
    for (EdgeId e : tree->tree_edges) in_t[e] = 1;
  std::ostringstream out;
  out << "graph G {\n";
  out << "  // outer face:";
  for (Vertex v : g.outer_cycle()) out << ' ' << v;
  out << "\n";
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    out << "  " << g.tail(2 * e) << " -- " << g.head(2 * e);
    std::vector<std::string> attrs;
    if (ann && ann->has_labels) {
      std::string lab = std::string(label_name(ann->label[2 * e])) + "|" +
                        label_name(ann->label[2 * e + 1]);
      if (h && h->rule_tags[e]) {
        lab += " H:";
        if (h->rule_tags[e] & HSubgraph::H1) lab += "1";
        if (h->rule_tags[e] & HSubgraph::H2) lab += "2";
        if (h->rule_tags[e] & HSubgraph::H3) lab += "3";
        if (h->rule_tags[e] & HSubgraph::H4) lab += "4";
      }
      attrs.push_back("label=\"" + lab + "\"");
    }
    if (tree && in_t[e]) attrs.push_back("style=bold");
    if (!attrs.empty()) {
      out << " [";
      for (size_t i = 0; i < attrs.size(); ++i) out << (i ? ", " : "") << attrs[i];
      out << "]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string graph_to_text(const PlanarGraph& g) {
  std::ostringstream out;
  out << "n=" << g.n << " m=" << g.num_edges() << " faces=" << g.faces.count << "\n";
  out << "roots v1=" << g.roots.v1 << " v2=" << g.roots.v2 << " vn=" << g.roots.vn << "\n";
  out << "outer:";
  for (Vertex v : g.outer_cycle()) out << ' ' << v;
  out << "\n";
  auto rot = g.rotation_system();
  for (Vertex v = 0; v < g.n; ++v) {
    out << v << ":";
    for (Vertex w : rot[v]) out << ' ' << w;
    out << "\n";
  }
  return out.str();
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError(Err::BadInput, "cannot open " + path);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw GraphError(Err::BadInput, "malformed json in " + path);
  return j;
}

void save_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw GraphError(Err::BadInput, "cannot open " + path + " for writing");
  out << text;
}

}  // namespace cotree
