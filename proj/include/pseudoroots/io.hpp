#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pseudoroots/digraph.hpp"
#include "pseudoroots/divisor_graph.hpp"
#include "pseudoroots/duclosure.hpp"
#include "pseudoroots/matrix.hpp"
#include "pseudoroots/ncpoly.hpp"
#include "pseudoroots/pseudoroots.hpp"

// JSON and DOT encodings of the library types. Every *_from_json throws
// InputError on malformed input.
namespace pseudoroots::io {

using nlohmann::json;

// {"d": 2, "entries": [["0","1"],["-1/2","0"]]}; entries may also be JSON
// integers; non-normalized fractions are accepted.
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

// {"d": 2, "coeffs": [<matrix>, ...]}, leading coefficient first.
json poly_to_json(const Poly& p);
Poly poly_from_json(const json& j);

// {"vertices": [{"id": "...", "rank": 0}], "edges": [{"id", "tail", "head"}]}
json graph_to_json(const Digraph& g);
GraphSpec graph_spec_from_json(const json& j);
Digraph graph_from_json(const json& j);

// {"edges": ["<edge-id>", ...]}
json edge_set_to_json(const EdgeSet& es);
EdgeSet edge_set_from_json(const Digraph& host, const json& j);

json path_to_json(const Digraph& g, const std::vector<EdgeIndex>& path);
json trace_to_json(const Digraph& g, const ClosureTrace& trace);

// {"n": 2, "d": 2, "roots": [<matrix>, ...]}
json root_set_to_json(const RootSet& rs);
RootSet root_set_from_json(const json& j);

// {"n": 2, "d": 2, "entries": {"{1}:2": <matrix>, ...}}
json table_to_json(const PseudoRootTable& table);

// {"edges": [{"edge": "<id>", "value": <matrix>, "name": "<generator>"}]};
// "name" is optional (defaults to the edge id). In to_json, "expr" holds
// the derivation of each label.
json labeled_set_to_json(const LabeledEdgeSet& ls);
LabeledEdgeSet labeled_set_from_json(const Digraph& host, const json& j);

// Candidates for divisor graphs: {"edges": [{"value": .., "name": ..}]}
// (same shape as a labeled set; "edge" is ignored) or {"roots": [...]}.
std::vector<NamedMatrix> named_matrices_from_json(const json& j);

// Graph JSON plus {"polys": {vertexId: <poly>}, "labels": {edgeId: <matrix>},
// "label_names": {edgeId: name}}.
json divisor_graph_to_json(const DivisorGraph& dg);

// Positive edges solid; members of `highlight` drawn bold red. Ranked
// vertices share a rank row.
std::string to_dot(const Digraph& g, const std::optional<EdgeSet>& highlight = std::nullopt);
std::string divisor_graph_to_dot(const DivisorGraph& dg);

json parse_json_file(const std::string& path);

}  // namespace pseudoroots::io
