#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "pseudoroots/matrix.hpp"

namespace pseudoroots {

// Expression over named generators built from ring operations and the two
// conjugations
//   lconj(a, b) = (a - b) a (a - b)^{-1}
//   rconj(a, b) = (a - b)^{-1} a (a - b).
// Nodes are shared, so derivation DAGs stay small.
class ConjExpr {
 public:
  enum class Op { Generator, Sum, Difference, Product, Negation, LeftConj, RightConj };

  static ConjExpr generator(std::string name);
  static ConjExpr sum(const ConjExpr& a, const ConjExpr& b);
  static ConjExpr difference(const ConjExpr& a, const ConjExpr& b);
  static ConjExpr product(const ConjExpr& a, const ConjExpr& b);
  static ConjExpr negation(const ConjExpr& a);
  static ConjExpr lconj(const ConjExpr& a, const ConjExpr& b);
  static ConjExpr rconj(const ConjExpr& a, const ConjExpr& b);

  Op op() const;
  // Generator name; empty for other nodes.
  const std::string& name() const;
  std::vector<ConjExpr> children() const;

  // Throws InputError for an unbound generator and SingularDifference when a
  // conjugating difference is not invertible.
  Matrix eval(const std::map<std::string, Matrix>& assignment) const;

  // Nested text, e.g. "lconj(g2,g1)".
  std::string str() const;
  std::size_t depth() const;

 private:
  struct Node;
  explicit ConjExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace pseudoroots
