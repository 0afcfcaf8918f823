#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pseudoroots/digraph.hpp"
#include "pseudoroots/matrix.hpp"
#include "pseudoroots/ncpoly.hpp"
#include "pseudoroots/pseudoroots.hpp"

namespace pseudoroots {

struct NamedMatrix {
  std::string name;
  Matrix value;
};

// Layered graph of monic right divisors of P reachable from P by stripping
// linear left factors t - x with x from a candidate set. Vertex k holds
// B_k with P = quotients[k] * B_k; an edge B1 -> B2 carries x with
// B1 = (t - x) B2.
struct DivisorGraph {
  Digraph graph;
  std::vector<Poly> polys;
  std::vector<Poly> quotients;
  std::vector<Matrix> labels;
  std::vector<std::string> label_names;
  // Candidates that divided nothing.
  std::vector<std::string> unused;

  VertexIndex source() const { return 0; }
};

// Breadth-first by degree; vertices in a layer are ordered by their
// coefficient text. Vertex ids are "d<degree>.<position>", edge ids
// "<tail>><head>". Throws PreconditionError unless p is monic.
DivisorGraph build_divisor_graph(const Poly& p, const std::vector<NamedMatrix>& candidates);

struct PathConflict {
  VertexIndex from;
  VertexIndex to;
  std::vector<EdgeIndex> first;
  std::vector<EdgeIndex> second;
};

struct PathIndependenceReport {
  bool independent = true;
  std::optional<PathConflict> conflict;
  // Product along any source -> sink path, when one exists.
  std::optional<Poly> source_sink_poly;
};

// Every pair of positive paths with common endpoints gives the same product
// of (t - label) factors.
PathIndependenceReport verify_path_independence(const DivisorGraph& dg);

// Only length-2 path pairs: e1 + f1 = e2 + f2 and e1 f1 = e2 f2.
PathIndependenceReport diamond_relations_check(const DivisorGraph& dg);

struct IdentificationReport {
  bool identified = true;
  EdgeSet on_paths;  // E_0
  std::optional<EdgeIndex> failing_edge;
};

// Each edge on a source -> sink path yields P = Q1 (t - label) Q2 with Q1, Q2
// the products along the two path segments. Throws PreconditionError when
// no such path exists or the source/sink are not unique.
IdentificationReport iterated_identification(const DivisorGraph& dg);

// Vertex map from boolean_lattice(n) onto dg, matching every Γ_n edge (A, i)
// to a divisor-graph edge labeled table(A, i); nullopt unless it is a
// label-preserving isomorphism.
std::optional<std::vector<VertexIndex>> match_boolean_lattice(const DivisorGraph& dg, const Digraph& gamma,
                                                              const PseudoRootTable& table);

}  // namespace pseudoroots
