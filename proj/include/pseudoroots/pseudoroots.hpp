#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pseudoroots/conj_expr.hpp"
#include "pseudoroots/digraph.hpp"
#include "pseudoroots/duclosure.hpp"
#include "pseudoroots/hasse.hpp"
#include "pseudoroots/matrix.hpp"
#include "pseudoroots/ncpoly.hpp"

namespace pseudoroots {

struct GenericityReport {
  bool generic = true;
  // Indices (1-based) of the first failing Vandermonde matrix or
  // quasideterminant; for a quasideterminant the last index is i_{k+1}.
  std::vector<int> failing;
  std::string reason;
};

// Right roots x_1..x_n of a common dimension. Roots are addressed 1-based.
class RootSet {
 public:
  explicit RootSet(std::vector<Matrix> roots);

  int n() const noexcept { return static_cast<int>(roots_.size()); }
  std::size_t dim() const noexcept { return dim_; }
  const Matrix& root(int i) const { return roots_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<Matrix>& roots() const noexcept { return roots_; }

  // Computed once, shared by copies.
  const GenericityReport& genericity() const;

 private:
  struct Cache;
  std::vector<Matrix> roots_;
  std::size_t dim_ = 0;
  std::shared_ptr<Cache> cache_;
};

// Block matrix whose row r (from the top) holds x_{i_c}^{k-r}, k+1 = number
// of indices; the bottom block row is all identities. Throws
// PreconditionError on a repeated or out-of-range index.
Matrix vandermonde_matrix(const RootSet& rs, std::span<const int> indices);

// x_{i_{k+1}}^k - r V(i_1..i_k)^{-1} c with r = (x_{i_1}^k .. x_{i_k}^k) and
// c = (x_{i_{k+1}}^{k-1}, .., 1)^T. A single index gives the identity.
// Throws SingularVandermonde.
Matrix vandermonde_quasidet(const RootSet& rs, std::span<const int> indices);

GenericityReport is_generic(const RootSet& rs);

// v x_i v^{-1} with v = v(a_1, .., a_k, i) for the given ordering of A.
// Throws SingularVandermonde or SingularQuasidet.
Matrix pseudo_root_ordered(const RootSet& rs, std::span<const int> ordered_set, int i);
// Same value; computed under two orderings of A, which must agree.
Matrix pseudo_root(const RootSet& rs, SubsetMask set, int i);

// Images of the pseudo-roots x_{A,i}, keyed by boolean-lattice edge.
class PseudoRootTable {
 public:
  PseudoRootTable(int n, std::size_t dim) : n_(n), dim_(dim) {}

  int n() const noexcept { return n_; }
  std::size_t dim() const noexcept { return dim_; }
  const Matrix& at(const GammaEdgeLabel& edge) const;
  const Matrix& at(SubsetMask set, int i) const { return at(GammaEdgeLabel{set, i}); }
  void set(const GammaEdgeLabel& edge, Matrix value) { entries_.insert_or_assign(edge, std::move(value)); }
  const std::map<GammaEdgeLabel, Matrix>& entries() const noexcept { return entries_; }

 private:
  int n_;
  std::size_t dim_;
  std::map<GammaEdgeLabel, Matrix> entries_;
};

// Describes the first diamond whose sum or product relation fails.
std::optional<std::string> check_diamonds(const PseudoRootTable& table);

// Every x_{A,i}. Requires generic roots; validates the diamond relations
// and (empty A) x_{{},i} = x_i, throwing LemmaViolated on failure.
PseudoRootTable build_table(const RootSet& rs);

// [y_n, .., y_1] with y_k = x_{{i_1..i_{k-1}}, i_k}, ready for
// from_linear_factors. `ordering` is a permutation of 1..n.
std::vector<Matrix> defining_factors(const PseudoRootTable& table, std::span<const int> ordering);

// (t - y_n) .. (t - y_1) for the identity ordering. When n <= 5 every
// ordering is checked to give the same polynomial (LemmaViolated if not).
Poly canonical_polynomial(const PseudoRootTable& table);
Poly canonical_polynomial(const RootSet& rs);

// Labels across a diamond with top edges e1, e2 (common tail) continuing to
// f1, f2 (common head) satisfy e1 + f1 = e2 + f2 and e1 f1 = e2 f2.
// d_op: tops -> bottoms, u_op: bottoms -> tops. Throws SingularDifference.
std::pair<Matrix, Matrix> d_op(const Matrix& a1, const Matrix& a2);
std::pair<Matrix, Matrix> u_op(const Matrix& b1, const Matrix& b2);

struct EdgeLabel {
  Matrix value;
  ConjExpr expr;
};

// Ring values attached to some edges of a host graph.
class LabeledEdgeSet {
 public:
  explicit LabeledEdgeSet(const Digraph& host) : host_(&host) {}

  const Digraph& host() const noexcept { return *host_; }
  // Input label; the generator name defaults to the edge id.
  void add(EdgeIndex e, Matrix value, std::string name = {});
  void add_derived(EdgeIndex e, EdgeLabel label);
  bool contains(EdgeIndex e) const { return labels_.count(e) != 0; }
  const EdgeLabel& at(EdgeIndex e) const;
  const std::map<EdgeIndex, EdgeLabel>& labels() const noexcept { return labels_; }
  std::size_t size() const noexcept { return labels_.size(); }
  EdgeSet edges() const;
  // Generator name -> value for the input labels.
  const std::map<std::string, Matrix>& assignment() const noexcept { return generators_; }

 private:
  const Digraph* host_;
  std::map<EdgeIndex, EdgeLabel> labels_;
  std::map<std::string, Matrix> generators_;
};

// Input labels for the given Γ_n edges taken from a table.
LabeledEdgeSet labels_from_table(const Digraph& gamma, const PseudoRootTable& table,
                                 std::span<const EdgeIndex> edges);

struct SkippedDerivation {
  OpKind kind;
  EdgePair input;
  std::string reason;
};

struct LabeledCompletion {
  LabeledEdgeSet labels;
  std::vector<ClosureStep> steps;
  std::vector<SkippedDerivation> skipped;
};

// Closure of the labeled edges under D/U-operations, with d_op/u_op values
// on every derived pair. Singular differences are skipped and reported.
// Throws InconsistentLabels if an edge receives two different values.
LabeledCompletion labeled_completion(const LabeledEdgeSet& ls);

struct Factorization {
  std::vector<EdgeIndex> path;
  // Factors e_1..e_n in path order: P = (t - e_1) .. (t - e_n).
  std::vector<Matrix> factors;
  std::vector<ConjExpr> traces;
  Poly polynomial;
  LabeledCompletion closure;
};

// Throws NotSufficient when the labeled completion has no source-to-sink
// path.
Factorization derive_factorization(const LabeledEdgeSet& ls);

// Commutative image x_{A,i} -> s_i. Throws PreconditionError if the s_i
// repeat or their count differs from n.
std::map<GammaEdgeLabel, Rational> scalar_specialize(const PseudoRootTable& table,
                                                     std::span<const Rational> s);
std::map<EdgeIndex, Rational> scalar_specialize(const EdgeSet& es, std::span<const Rational> s);
// True when the values are exactly {s_1..s_n}, each once.
bool specializes_to_defining_set(const std::map<EdgeIndex, Rational>& values, std::span<const Rational> s);

// Roots with integer entries in [-bound, bound], redrawn until generic.
// Throws NumericError after max_attempts draws.
RootSet random_generic_roots(int n, std::size_t dim, std::mt19937_64& rng, int bound = 5,
                             int max_attempts = 1000);
Matrix random_matrix(std::size_t dim, std::mt19937_64& rng, int bound = 5);

}  // namespace pseudoroots
