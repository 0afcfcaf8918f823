// Python module: every graph, matrix and polynomial crosses the boundary as
// the same JSON text the CLI reads and writes.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>

#include "pseudoroots/divisor_graph.hpp"
#include "pseudoroots/duclosure.hpp"
#include "pseudoroots/errors.hpp"
#include "pseudoroots/hasse.hpp"
#include "pseudoroots/io.hpp"
#include "pseudoroots/pseudoroots.hpp"
#include "pseudoroots/verify.hpp"

namespace py = pybind11;
namespace pr = pseudoroots;
namespace io = pseudoroots::io;
using nlohmann::json;

namespace {

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw pr::InputError(std::string("bad JSON: ") + e.what());
  }
}

std::vector<std::string> edge_ids(const pr::Digraph& g, const std::vector<pr::EdgeIndex>& edges) {
  std::vector<std::string> out;
  for (auto e : edges) out.push_back(g.edge_id(e));
  return out;
}

std::string completion(const std::string& graph, const std::string& edges) {
  const pr::Digraph g = io::graph_from_json(parse(graph));
  const pr::Completion c = pr::completion(io::edge_set_from_json(g, parse(edges)));
  return json{{"edges", c.edges.ids()}, {"trace", io::trace_to_json(g, c.trace)}}.dump();
}

std::string sufficient(const std::string& graph, const std::string& edges) {
  const pr::Digraph g = io::graph_from_json(parse(graph));
  const pr::SufficiencyReport r = pr::is_sufficient(io::edge_set_from_json(g, parse(edges)));
  return json{{"sufficient", r.sufficient}, {"path", edge_ids(g, r.path)}, {"completion", r.completion.edges.ids()}}
      .dump();
}

std::string ample(const std::string& graph, const std::string& edges) {
  const pr::Digraph g = io::graph_from_json(parse(graph));
  const pr::AmpleReport r = pr::is_ample(io::edge_set_from_json(g, parse(edges)));
  json j = {{"ample", r.ample}};
  if (!r.ample) {
    j["failed_condition"] = r.failed_condition;
    if (r.uncovered) j["uncovered"] = g.vertex_id(*r.uncovered);
  }
  return j.dump();
}

std::string random_roots(int n, std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return io::root_set_to_json(pr::random_generic_roots(n, dim, rng)).dump();
}

std::string pseudo_root(const std::string& roots, const std::vector<int>& set, int i) {
  return io::matrix_to_json(pr::pseudo_root_ordered(io::root_set_from_json(parse(roots)), set, i)).dump();
}

std::string table(const std::string& roots) {
  return io::table_to_json(pr::build_table(io::root_set_from_json(parse(roots)))).dump();
}

std::string polynomial(const std::string& roots) {
  return io::poly_to_json(pr::canonical_polynomial(io::root_set_from_json(parse(roots)))).dump();
}

std::pair<std::string, std::string> pair_op(const std::string& a, const std::string& b, bool down) {
  const pr::Matrix x = io::matrix_from_json(parse(a)), y = io::matrix_from_json(parse(b));
  const auto [p, q] = down ? pr::d_op(x, y) : pr::u_op(x, y);
  return {io::matrix_to_json(p).dump(), io::matrix_to_json(q).dump()};
}

std::string derive(const std::string& graph, const std::string& labels) {
  const pr::Digraph g = io::graph_from_json(parse(graph));
  const pr::Factorization f = pr::derive_factorization(io::labeled_set_from_json(g, parse(labels)));
  json factors = json::array();
  for (std::size_t k = 0; k < f.factors.size(); ++k) {
    factors.push_back({{"edge", g.edge_id(f.path[k])}, {"value", io::matrix_to_json(f.factors[k])},
                       {"expr", f.traces[k].str()}});
  }
  return json{{"path", edge_ids(g, f.path)}, {"factors", std::move(factors)},
              {"polynomial", io::poly_to_json(f.polynomial)}}
      .dump();
}

std::string divisors(const std::string& poly, const std::string& candidates) {
  const pr::DivisorGraph dg =
      pr::build_divisor_graph(io::poly_from_json(parse(poly)), io::named_matrices_from_json(parse(candidates)));
  json j = io::divisor_graph_to_json(dg);
  j["path_independent"] = pr::verify_path_independence(dg).independent;
  j["diamonds_hold"] = pr::diamond_relations_check(dg).independent;
  return j.dump();
}

std::string run_suite(const std::string& name, std::uint64_t seed, std::optional<int> n, std::optional<int> cases) {
  const auto* suite = pr::verify::find_suite(name);
  if (suite == nullptr) throw pr::InputError("unknown suite " + name);
  return pr::verify::to_json(suite->run(pr::verify::Options{seed, n, cases})).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  auto base = py::register_exception<pr::Error>(m, "Error", PyExc_RuntimeError);
  auto input = py::register_exception<pr::InputError>(m, "InputError", base.ptr());
  auto numeric = py::register_exception<pr::NumericError>(m, "NumericError", base.ptr());
  auto property = py::register_exception<pr::PropertyFailure>(m, "PropertyFailure", base.ptr());
  py::register_exception<pr::InvalidGraph>(m, "InvalidGraph", input.ptr());
  py::register_exception<pr::SingularDifference>(m, "SingularDifference", numeric.ptr());
  py::register_exception<pr::SingularVandermonde>(m, "SingularVandermonde", numeric.ptr());
  py::register_exception<pr::NotSufficient>(m, "NotSufficient", property.ptr());
  py::register_exception<pr::InconsistentLabels>(m, "InconsistentLabels", property.ptr());

  m.attr("DEFAULT_SEED") = pr::verify::kDefaultSeed;
  m.def("boolean_lattice", [](int n) { return io::graph_to_json(pr::boolean_lattice(n)).dump(); });
  m.def("partition_lattice", [](int n) { return io::graph_to_json(pr::partition_lattice(n).graph).dump(); });
  m.def("check_graph", [](const std::string& graph) {
    const pr::Digraph g = io::graph_from_json(parse(graph));
    return json{{"layered", g.has_rank()}, {"modular", pr::is_modular(g).modular}}.dump();
  });
  m.def("completion", &completion);
  m.def("is_sufficient", &sufficient);
  m.def("is_ample", &ample);
  m.def("random_roots", &random_roots);
  m.def("pseudo_root", &pseudo_root);
  m.def("build_table", &table);
  m.def("canonical_polynomial", &polynomial);
  m.def("d_op", [](const std::string& a, const std::string& b) { return pair_op(a, b, true); });
  m.def("u_op", [](const std::string& a, const std::string& b) { return pair_op(a, b, false); });
  m.def("derive_factorization", &derive);
  m.def("divisor_graph", &divisors);
  m.def("suite_names", [] {
    std::vector<std::string> out;
    for (const auto& s : pr::verify::suites()) out.push_back(s.name);
    return out;
  });
  m.def("run_suite", &run_suite, py::arg("name"), py::arg("seed") = pr::verify::kDefaultSeed,
        py::arg("n") = std::nullopt, py::arg("cases") = std::nullopt);
}
