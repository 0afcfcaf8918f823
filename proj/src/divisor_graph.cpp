#include "pseudoroots/divisor_graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "pseudoroots/errors.hpp"
#include "pseudoroots/hasse.hpp"

namespace pseudoroots {

namespace {

std::string poly_key(const Poly& p) {
  std::string key;
  for (const auto& c : p.coeffs()) key += c.str() + ";";
  return key;
}

Poly path_product(const DivisorGraph& dg, std::span<const EdgeIndex> path, std::size_t dim) {
  std::vector<Matrix> factors;
  for (EdgeIndex e : path) factors.push_back(dg.labels[e]);
  return from_linear_factors(factors, dim);
}

// Some positive path from u to v (u must reach v).
std::vector<EdgeIndex> any_path(const Digraph& g, VertexIndex u, VertexIndex v) {
  std::vector<EdgeIndex> path;
  while (u != v) {
    for (EdgeIndex e : g.out_edges(u)) {
      if (g.reaches(g.head(e), v)) {
        path.push_back(e);
        u = g.head(e);
        break;
      }
    }
  }
  return path;
}

std::optional<VertexIndex> sink_vertex(const DivisorGraph& dg) {
  for (VertexIndex v = 0; v < dg.polys.size(); ++v) {
    if (dg.polys[v].degree() == 0) return v;
  }
  return std::nullopt;
}

}  // namespace

DivisorGraph build_divisor_graph(const Poly& p, const std::vector<NamedMatrix>& candidates) {
  if (!p.is_monic()) throw PreconditionError("build_divisor_graph: polynomial must be monic");
  const std::size_t dim = p.dim();
  std::vector<NamedMatrix> distinct;
  for (const auto& c : candidates) {
    if (c.value.dim() != dim) throw DimensionMismatch("candidate \"" + c.name + "\" has the wrong dimension");
    const bool seen = std::any_of(distinct.begin(), distinct.end(),
                                  [&c](const NamedMatrix& d) { return d.value == c.value; });
    if (!seen) distinct.push_back(c);
  }
  std::vector<bool> used(distinct.size(), false);

  std::vector<Poly> polys{p};
  std::vector<Poly> quotients{Poly::one(dim)};
  struct RawEdge {
    VertexIndex tail;
    VertexIndex head;
    std::size_t candidate;
  };
  std::vector<RawEdge> edges;

  std::vector<VertexIndex> layer{0};
  while (!layer.empty() && polys[layer.front()].degree() > 0) {
    // key -> (poly, quotient); edges waiting for the head index
    std::map<std::string, std::pair<Poly, Poly>> next;
    std::vector<std::tuple<VertexIndex, std::string, std::size_t>> pending;
    for (VertexIndex v : layer) {
      for (std::size_t c = 0; c < distinct.size(); ++c) {
        auto division = left_divide_linear(polys[v], distinct[c].value);
        if (!division.remainder.is_zero()) continue;
        used[c] = true;
        const std::string key = poly_key(division.quotient);
        next.try_emplace(key, division.quotient, quotients[v] * Poly::linear(distinct[c].value));
        pending.emplace_back(v, key, c);
      }
    }
    std::map<std::string, VertexIndex> index_of;
    std::vector<VertexIndex> next_layer;
    for (auto& [key, entry] : next) {
      index_of.emplace(key, polys.size());
      next_layer.push_back(polys.size());
      polys.push_back(entry.first);
      quotients.push_back(entry.second);
    }
    for (const auto& [tail, key, c] : pending) edges.push_back({tail, index_of.at(key), c});
    layer = std::move(next_layer);
  }

  GraphSpec spec;
  std::vector<std::size_t> position(polys.size(), 0);
  std::map<std::size_t, std::size_t> per_degree;
  for (VertexIndex v = 0; v < polys.size(); ++v) {
    const std::size_t deg = polys[v].degree();
    position[v] = per_degree[deg]++;
    spec.vertices.push_back({"d" + std::to_string(deg) + "." + std::to_string(position[v]), static_cast<int>(deg)});
  }
  DivisorGraph dg{Digraph(GraphSpec{}), polys, quotients, {}, {}, {}};
  for (const auto& e : edges) {
    spec.edges.push_back({spec.vertices[e.tail].id + ">" + spec.vertices[e.head].id, spec.vertices[e.tail].id,
                          spec.vertices[e.head].id});
    dg.labels.push_back(distinct[e.candidate].value);
    dg.label_names.push_back(distinct[e.candidate].name);
  }
  dg.graph = Digraph(std::move(spec));
  for (std::size_t c = 0; c < distinct.size(); ++c) {
    if (!used[c]) dg.unused.push_back(distinct[c].name);
  }
  for (const auto& c : candidates) {
    const bool kept = std::any_of(distinct.begin(), distinct.end(), [&c](const NamedMatrix& d) { return d.name == c.name; });
    if (!kept) dg.unused.push_back(c.name + " (duplicate value)");
  }
  return dg;
}

PathIndependenceReport verify_path_independence(const DivisorGraph& dg) {
  const Digraph& g = dg.graph;
  const std::size_t dim = dg.polys.front().dim();
  PathIndependenceReport report;
  for (VertexIndex from = 0; from < g.vertex_count(); ++from) {
    std::map<VertexIndex, std::pair<Poly, std::vector<EdgeIndex>>> seen;
    std::vector<EdgeIndex> path;
    // Depth-first over all paths, carrying the running product.
    auto walk = [&](auto&& self, VertexIndex at, const Poly& product) -> bool {
      for (EdgeIndex e : g.out_edges(at)) {
        path.push_back(e);
        const Poly extended = product * Poly::linear(dg.labels[e]);
        const VertexIndex to = g.head(e);
        auto [it, fresh] = seen.try_emplace(to, extended, path);
        if (!fresh && it->second.first != extended) {
          report.independent = false;
          report.conflict = PathConflict{from, to, it->second.second, path};
          return false;
        }
        if (!self(self, to, extended)) return false;
        path.pop_back();
      }
      return true;
    };
    if (!walk(walk, from, Poly::one(dim))) return report;
    if (from == dg.source()) {
      if (auto sink = sink_vertex(dg); sink && seen.count(*sink)) report.source_sink_poly = seen.at(*sink).first;
    }
  }
  return report;
}

PathIndependenceReport diamond_relations_check(const DivisorGraph& dg) {
  const Digraph& g = dg.graph;
  PathIndependenceReport report;
  for (VertexIndex top = 0; top < g.vertex_count(); ++top) {
    std::vector<std::pair<EdgeIndex, EdgeIndex>> two_paths;
    for (EdgeIndex e : g.out_edges(top)) {
      for (EdgeIndex f : g.out_edges(g.head(e))) two_paths.emplace_back(e, f);
    }
    for (std::size_t a = 0; a < two_paths.size(); ++a) {
      for (std::size_t b = a + 1; b < two_paths.size(); ++b) {
        const auto [e1, f1] = two_paths[a];
        const auto [e2, f2] = two_paths[b];
        if (g.head(f1) != g.head(f2)) continue;
        const auto& x1 = dg.labels[e1];
        const auto& y1 = dg.labels[f1];
        const auto& x2 = dg.labels[e2];
        const auto& y2 = dg.labels[f2];
        if (x1 + y1 != x2 + y2 || x1 * y1 != x2 * y2) {
          report.independent = false;
          report.conflict = PathConflict{top, g.head(f1), {e1, f1}, {e2, f2}};
          return report;
        }
      }
    }
  }
  if (auto sink = sink_vertex(dg); sink && g.reaches(dg.source(), *sink)) {
    report.source_sink_poly = path_product(dg, any_path(g, dg.source(), *sink), dg.polys.front().dim());
  }
  return report;
}

IdentificationReport iterated_identification(const DivisorGraph& dg) {
  const Digraph& g = dg.graph;
  const auto sink = sink_vertex(dg);
  if (sources(g).size() != 1 || !sink) {
    throw PreconditionError("iterated_identification needs a unique source and the vertex 1");
  }
  if (!g.reaches(dg.source(), *sink)) throw PreconditionError("no path from the source to the sink");
  const std::size_t dim = dg.polys.front().dim();
  IdentificationReport report{true, edges_on_st_paths(g, dg.source(), *sink), std::nullopt};
  const Poly& p = dg.polys[dg.source()];
  for (EdgeIndex e : report.on_paths.members()) {
    const Poly left = path_product(dg, any_path(g, dg.source(), g.tail(e)), dim);
    const Poly right = path_product(dg, any_path(g, g.head(e), *sink), dim);
    if (left * Poly::linear(dg.labels[e]) * right != p) {
      report.identified = false;
      report.failing_edge = e;
      break;
    }
  }
  return report;
}

std::optional<std::vector<VertexIndex>> match_boolean_lattice(const DivisorGraph& dg, const Digraph& gamma,
                                                              const PseudoRootTable& table) {
  const Digraph& g = dg.graph;
  if (g.vertex_count() != gamma.vertex_count() || g.edge_count() != gamma.edge_count()) return std::nullopt;
  const auto gamma_sources = sources(gamma);
  if (gamma_sources.size() != 1) return std::nullopt;
  constexpr VertexIndex kUnmapped = static_cast<VertexIndex>(-1);
  std::vector<VertexIndex> map(gamma.vertex_count(), kUnmapped);
  map[gamma_sources.front()] = dg.source();
  for (VertexIndex v : gamma.topological_order()) {
    if (map[v] == kUnmapped) return std::nullopt;
    for (EdgeIndex e : gamma.out_edges(v)) {
      const Matrix& value = table.at(parse_gamma_edge(gamma.edge_id(e)));
      std::optional<VertexIndex> image;
      for (EdgeIndex f : g.out_edges(map[v])) {
        if (dg.labels[f] == value) image = g.head(f);
      }
      if (!image) return std::nullopt;
      VertexIndex& slot = map[gamma.head(e)];
      if (slot != kUnmapped && slot != *image) return std::nullopt;
      slot = *image;
    }
  }
  std::set<VertexIndex> images(map.begin(), map.end());
  if (images.size() != map.size()) return std::nullopt;
  return map;
}

}  // namespace pseudoroots
