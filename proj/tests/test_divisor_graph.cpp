#include "doctest.h"
#include "oracles.hpp"
#include "pseudoroots/divisor_graph.hpp"
#include "pseudoroots/errors.hpp"

using namespace pseudoroots;

namespace {

std::vector<NamedMatrix> table_candidates(const PseudoRootTable& table) {
  std::vector<NamedMatrix> out;
  for (const auto& [edge, value] : table.entries()) out.push_back({edge.str(), value});
  return out;
}

}  // namespace

TEST_CASE("divisor graph of a generic quadratic") {
  std::mt19937_64 rng(41);
  const RootSet rs = random_generic_roots(2, 2, rng);
  const PseudoRootTable table = build_table(rs);
  const Poly p = canonical_polynomial(table);
  const DivisorGraph dg = build_divisor_graph(p, table_candidates(table));
  CHECK(dg.graph.vertex_count() == 4);
  CHECK(dg.graph.edge_count() == 4);
  CHECK(dg.unused.empty());
  CHECK(dg.polys[dg.source()] == p);
  for (VertexIndex v = 0; v < dg.polys.size(); ++v) {
    CHECK(dg.quotients[v] * dg.polys[v] == p);
    CHECK(dg.graph.rank(v) == static_cast<int>(dg.polys[v].degree()));
  }
  for (EdgeIndex e = 0; e < dg.graph.edge_count(); ++e) {
    const Poly& tail = dg.polys[dg.graph.tail(e)];
    CHECK(Poly::linear(dg.labels[e]) * dg.polys[dg.graph.head(e)] == tail);
  }
  CHECK(verify_path_independence(dg).independent);
  CHECK(diamond_relations_check(dg).independent);
  CHECK(verify_path_independence(dg).source_sink_poly == p);
  const auto id = iterated_identification(dg);
  CHECK(id.identified);
  CHECK(id.on_paths.size() == 4);
  CHECK(match_boolean_lattice(dg, boolean_lattice(2), table).has_value());
}

TEST_CASE("divisor graph of a generic cubic is the labeled boolean lattice") {
  std::mt19937_64 rng(42);
  const RootSet rs = random_generic_roots(3, 2, rng);
  const PseudoRootTable table = build_table(rs);
  const DivisorGraph dg = build_divisor_graph(canonical_polynomial(table), table_candidates(table));
  const Digraph gamma = boolean_lattice(3);
  const auto map = match_boolean_lattice(dg, gamma, table);
  REQUIRE(map.has_value());
  CHECK((*map)[gamma.vertex("{1,2,3}")] == dg.source());
  CHECK(is_modular(dg.graph).modular);
  CHECK(verify_path_independence(dg).independent == diamond_relations_check(dg).independent);
}

TEST_CASE("candidates that divide nothing are reported; duplicates are merged") {
  std::mt19937_64 rng(43);
  const RootSet rs = random_generic_roots(2, 2, rng);
  const PseudoRootTable table = build_table(rs);
  auto candidates = table_candidates(table);
  candidates.push_back({"copy", candidates.front().value});
  candidates.push_back({"stranger", Matrix::scalar(2, 1000)});
  const DivisorGraph dg = build_divisor_graph(canonical_polynomial(table), candidates);
  CHECK(dg.graph.edge_count() == 4);
  CHECK(std::find(dg.unused.begin(), dg.unused.end(), "stranger") != dg.unused.end());
  CHECK(std::find(dg.unused.begin(), dg.unused.end(), "copy (duplicate value)") != dg.unused.end());
}

TEST_CASE("path checks catch a broken label") {
  std::mt19937_64 rng(44);
  const RootSet rs = random_generic_roots(2, 2, rng);
  const PseudoRootTable table = build_table(rs);
  DivisorGraph dg = build_divisor_graph(canonical_polynomial(table), table_candidates(table));
  dg.labels[0] = dg.labels[0] + Matrix::identity(2);
  const auto paths = verify_path_independence(dg);
  const auto diamonds = diamond_relations_check(dg);
  CHECK_FALSE(paths.independent);
  CHECK_FALSE(diamonds.independent);
  REQUIRE(paths.conflict.has_value());
  CHECK(paths.conflict->first != paths.conflict->second);
}

TEST_CASE("preconditions") {
  const Poly not_monic(1, {Matrix::scalar(1, 2), Matrix::scalar(1, 1)});
  CHECK_THROWS_AS(build_divisor_graph(not_monic, {}), PreconditionError);
  const Poly p = Poly::linear(Matrix::scalar(1, 3));
  CHECK_THROWS_AS(build_divisor_graph(p, {{"wrong", Matrix::identity(2)}}), DimensionMismatch);
  // Nothing divides: a single vertex and no path to the constant 1.
  const DivisorGraph lonely = build_divisor_graph(p, {{"four", Matrix::scalar(1, 4)}});
  CHECK(lonely.graph.vertex_count() == 1);
  CHECK_THROWS_AS(iterated_identification(lonely), PreconditionError);
}
