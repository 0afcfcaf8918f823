#include "pseudoroots/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "pseudoroots/errors.hpp"

namespace pseudoroots::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string text_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) throw InputError(std::string("field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

Rational entry_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return parse_rational(j.dump());
  throw InputError("matrix entries must be strings \"p\" or \"p/q\", got " + j.dump());
}

std::size_t dim_field(const json& j) {
  const json& d = field(j, "d");
  if (!d.is_number_integer() || d.get<long>() < 1) throw InputError("\"d\" must be a positive integer");
  return d.get<std::size_t>();
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return {{"d", m.dim()}, {"entries", std::move(rows)}};
}

Matrix matrix_from_json(const json& j) {
  const std::size_t d = dim_field(j);
  const json& rows = field(j, "entries");
  if (!rows.is_array() || rows.size() != d) throw InputError("matrix needs " + std::to_string(d) + " rows");
  std::vector<Rational> entries;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != d) throw InputError("matrix rows must have " + std::to_string(d) + " entries");
    for (const auto& e : row) entries.push_back(entry_from_json(e));
  }
  return Matrix(d, std::move(entries));
}

json poly_to_json(const Poly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(matrix_to_json(c));
  return {{"d", p.dim()}, {"coeffs", std::move(coeffs)}};
}

Poly poly_from_json(const json& j) {
  const std::size_t d = dim_field(j);
  const json& cs = field(j, "coeffs");
  if (!cs.is_array()) throw InputError("\"coeffs\" must be an array");
  std::vector<Matrix> coeffs;
  for (const auto& c : cs) coeffs.push_back(matrix_from_json(c));
  return Poly(d, std::move(coeffs));
}

json graph_to_json(const Digraph& g) {
  json vertices = json::array();
  for (const auto& v : g.spec().vertices) {
    json item = {{"id", v.id}};
    if (v.rank) item["rank"] = *v.rank;
    vertices.push_back(std::move(item));
  }
  json edges = json::array();
  for (const auto& e : g.spec().edges) edges.push_back({{"id", e.id}, {"tail", e.tail}, {"head", e.head}});
  return {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

GraphSpec graph_spec_from_json(const json& j) {
  GraphSpec spec;
  const json& vertices = field(j, "vertices");
  const json& edges = field(j, "edges");
  if (!vertices.is_array() || !edges.is_array()) throw InputError("\"vertices\" and \"edges\" must be arrays");
  for (const auto& v : vertices) {
    GraphSpec::Vertex vertex{text_field(v, "id"), std::nullopt};
    if (v.contains("rank")) {
      if (!v.at("rank").is_number_integer()) throw InputError("rank must be an integer");
      vertex.rank = v.at("rank").get<int>();
    }
    spec.vertices.push_back(std::move(vertex));
  }
  for (const auto& e : edges) spec.edges.push_back({text_field(e, "id"), text_field(e, "tail"), text_field(e, "head")});
  return spec;
}

Digraph graph_from_json(const json& j) { return Digraph(graph_spec_from_json(j)); }

json edge_set_to_json(const EdgeSet& es) { return {{"edges", es.ids()}}; }

EdgeSet edge_set_from_json(const Digraph& host, const json& j) {
  const json& edges = j.is_array() ? j : field(j, "edges");
  if (!edges.is_array()) throw InputError("\"edges\" must be an array of edge ids");
  EdgeSet es(host);
  for (const auto& id : edges) {
    if (!id.is_string()) throw InputError("edge ids must be strings");
    es.insert(host.edge(id.get<std::string>()));
  }
  return es;
}

json path_to_json(const Digraph& g, const std::vector<EdgeIndex>& path) {
  json out = json::array();
  for (EdgeIndex e : path) out.push_back(g.edge_id(e));
  return out;
}

json trace_to_json(const Digraph& g, const ClosureTrace& trace) {
  json steps = json::array();
  for (const auto& s : trace.steps) {
    json added = json::array();
    for (EdgeIndex e : s.added) added.push_back(g.edge_id(e));
    steps.push_back({{"kind", std::string(1, to_char(s.kind))},
                     {"input", {g.edge_id(s.input.first), g.edge_id(s.input.second)}},
                     {"output", {g.edge_id(s.output.first), g.edge_id(s.output.second)}},
                     {"added", std::move(added)}});
  }
  return steps;
}

json root_set_to_json(const RootSet& rs) {
  json roots = json::array();
  for (const auto& x : rs.roots()) roots.push_back(matrix_to_json(x));
  return {{"n", rs.n()}, {"d", rs.dim()}, {"roots", std::move(roots)}};
}

RootSet root_set_from_json(const json& j) {
  const std::size_t d = dim_field(j);
  const json& roots = field(j, "roots");
  if (!roots.is_array() || roots.empty()) throw InputError("\"roots\" must be a non-empty array");
  if (j.contains("n") && j.at("n") != roots.size()) throw InputError("\"n\" does not match the number of roots");
  std::vector<Matrix> xs;
  for (const auto& r : roots) {
    xs.push_back(matrix_from_json(r));
    if (xs.back().dim() != d) throw InputError("root dimension differs from \"d\"");
  }
  return RootSet(std::move(xs));
}

json table_to_json(const PseudoRootTable& table) {
  json entries = json::object();
  for (const auto& [edge, value] : table.entries()) entries[edge.str()] = matrix_to_json(value);
  return {{"n", table.n()}, {"d", table.dim()}, {"entries", std::move(entries)}};
}

json labeled_set_to_json(const LabeledEdgeSet& ls) {
  json edges = json::array();
  for (const auto& [e, label] : ls.labels()) {
    json item = {{"edge", ls.host().edge_id(e)}, {"value", matrix_to_json(label.value)}, {"expr", label.expr.str()}};
    if (label.expr.op() == ConjExpr::Op::Generator) item["name"] = label.expr.name();
    edges.push_back(std::move(item));
  }
  return {{"edges", std::move(edges)}};
}

LabeledEdgeSet labeled_set_from_json(const Digraph& host, const json& j) {
  const json& edges = field(j, "edges");
  if (!edges.is_array()) throw InputError("\"edges\" must be an array");
  LabeledEdgeSet ls(host);
  for (const auto& item : edges) {
    const EdgeIndex e = host.edge(text_field(item, "edge"));
    if (ls.contains(e)) throw InputError("edge \"" + host.edge_id(e) + "\" labeled twice");
    ls.add(e, matrix_from_json(field(item, "value")), item.contains("name") ? text_field(item, "name") : "");
  }
  return ls;
}

std::vector<NamedMatrix> named_matrices_from_json(const json& j) {
  std::vector<NamedMatrix> out;
  if (j.is_object() && j.contains("roots")) {
    const RootSet rs = root_set_from_json(j);
    for (int i = 1; i <= rs.n(); ++i) out.push_back({"x" + std::to_string(i), rs.root(i)});
    return out;
  }
  const json& edges = field(j, "edges");
  if (!edges.is_array()) throw InputError("\"edges\" must be an array");
  for (const auto& item : edges) {
    std::string name = item.contains("name") ? text_field(item, "name")
                       : item.contains("edge") ? text_field(item, "edge")
                                               : "s" + std::to_string(out.size() + 1);
    out.push_back({std::move(name), matrix_from_json(field(item, "value"))});
  }
  return out;
}

json divisor_graph_to_json(const DivisorGraph& dg) {
  json out = graph_to_json(dg.graph);
  json polys = json::object();
  for (VertexIndex v = 0; v < dg.polys.size(); ++v) polys[dg.graph.vertex_id(v)] = poly_to_json(dg.polys[v]);
  json labels = json::object();
  json names = json::object();
  for (EdgeIndex e = 0; e < dg.labels.size(); ++e) {
    labels[dg.graph.edge_id(e)] = matrix_to_json(dg.labels[e]);
    names[dg.graph.edge_id(e)] = dg.label_names[e];
  }
  out["polys"] = std::move(polys);
  out["labels"] = std::move(labels);
  out["label_names"] = std::move(names);
  out["unused"] = dg.unused;
  return out;
}

std::string to_dot(const Digraph& g, const std::optional<EdgeSet>& highlight) {
  std::ostringstream out;
  out << "digraph G {\n  rankdir=TB;\n";
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) out << "  " << quote(g.vertex_id(v)) << ";\n";
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    out << "  " << quote(g.vertex_id(g.tail(e))) << " -> " << quote(g.vertex_id(g.head(e))) << " [label="
        << quote(g.edge_id(e));
    if (highlight && highlight->contains(e)) out << ", color=red, penwidth=2.5";
    out << "];\n";
  }
  if (g.has_rank()) {
    std::map<int, std::vector<VertexIndex>> rows;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) rows[g.rank(v)].push_back(v);
    for (const auto& [rank, vs] : rows) {
      out << "  { rank=same;";
      for (VertexIndex v : vs) out << ' ' << quote(g.vertex_id(v)) << ';';
      out << " }\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string divisor_graph_to_dot(const DivisorGraph& dg) {
  const Digraph& g = dg.graph;
  std::ostringstream out;
  out << "digraph divisors {\n  rankdir=TB;\n";
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    out << "  " << quote(g.vertex_id(v)) << " [label=" << quote(dg.polys[v].str()) << "];\n";
  }
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    out << "  " << quote(g.vertex_id(g.tail(e))) << " -> " << quote(g.vertex_id(g.head(e))) << " [label="
        << quote(dg.label_names[e]) << "];\n";
  }
  std::map<int, std::vector<VertexIndex>> rows;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) rows[g.rank(v)].push_back(v);
  for (const auto& [rank, vs] : rows) {
    out << "  { rank=same;";
    for (VertexIndex v : vs) out << ' ' << quote(g.vertex_id(v)) << ';';
    out << " }\n";
  }
  out << "}\n";
  return out.str();
}

json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open \"" + path + "\"");
  try {
    return json::parse(in);
  } catch (const json::parse_error& err) {
    throw InputError("\"" + path + "\": " + err.what());
  }
}

}  // namespace pseudoroots::io
