#pragma once

#include <string>

#include "cotree/canonical_order.hpp"
#include "cotree/dual_order.hpp"
#include "cotree/planar_graph.hpp"
#include "cotree/tree_extract.hpp"
#include "json.hpp"

namespace cotree {

using json = nlohmann::ordered_json;

// Graph files carry the rotation system plus the rooted outer face:
// {"n": .., "rotations": [[..]..], "outer": [v1, vn, .., v2], "roots":
// [v1, v2, vn]}. Parsing uses the first three outer entries as the
// face witness; malformed input raises BadInput.
json graph_to_json(const PlanarGraph& g);
PlanarGraph graph_from_json(const json& j);

json ordering_to_json(const CanonicalOrdering& co, const VertexEnumeration& en);
json dual_order_to_json(const CanonicalOrdering& co, const VertexEnumeration& en,
                        const DualCanonicalOrdering& dco, const VertexEnumeration& dual_en);
json labels_to_json(const PlanarGraph& g, const EdgeAnnotation& ann);
json tree_to_json(const PlanarGraph& g, const SpanningTreePair& t);
json walk_to_json(const Walk& w);
json report_to_json(const ValidationReport& r);

// DOT export; when annotations or a tree are given, edges carry label
// attributes and tree edges are drawn bold.
std::string graph_to_dot(const PlanarGraph& g, const EdgeAnnotation* ann = nullptr,
                         const SpanningTreePair* tree = nullptr, const HSubgraph* h = nullptr);
std::string graph_to_text(const PlanarGraph& g);

json load_json_file(const std::string& path);
void save_text_file(const std::string& path, const std::string& body);

}  // namespace cotree
