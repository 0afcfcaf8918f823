#include "pseudoroots/conj_expr.hpp"

#include <algorithm>
#include <unordered_map>

#include "pseudoroots/errors.hpp"

namespace pseudoroots {

struct ConjExpr::Node {
  Op op;
  std::string name;
  std::vector<std::shared_ptr<const Node>> args;
};

namespace {

using NodePtr = const void*;

}  // namespace

ConjExpr ConjExpr::generator(std::string name) {
  return ConjExpr(std::make_shared<const Node>(Node{Op::Generator, std::move(name), {}}));
}

ConjExpr ConjExpr::sum(const ConjExpr& a, const ConjExpr& b) {
  return ConjExpr(std::make_shared<const Node>(Node{Op::Sum, {}, {a.node_, b.node_}}));
}

ConjExpr ConjExpr::difference(const ConjExpr& a, const ConjExpr& b) {
  return ConjExpr(std::make_shared<const Node>(Node{Op::Difference, {}, {a.node_, b.node_}}));
}

ConjExpr ConjExpr::product(const ConjExpr& a, const ConjExpr& b) {
  return ConjExpr(std::make_shared<const Node>(Node{Op::Product, {}, {a.node_, b.node_}}));
}

ConjExpr ConjExpr::negation(const ConjExpr& a) {
  return ConjExpr(std::make_shared<const Node>(Node{Op::Negation, {}, {a.node_}}));
}

ConjExpr ConjExpr::lconj(const ConjExpr& a, const ConjExpr& b) {
  return ConjExpr(std::make_shared<const Node>(Node{Op::LeftConj, {}, {a.node_, b.node_}}));
}

ConjExpr ConjExpr::rconj(const ConjExpr& a, const ConjExpr& b) {
  return ConjExpr(std::make_shared<const Node>(Node{Op::RightConj, {}, {a.node_, b.node_}}));
}

ConjExpr::Op ConjExpr::op() const { return node_->op; }

const std::string& ConjExpr::name() const { return node_->name; }

std::vector<ConjExpr> ConjExpr::children() const {
  std::vector<ConjExpr> out;
  for (const auto& a : node_->args) out.push_back(ConjExpr(a));
  return out;
}

Matrix ConjExpr::eval(const std::map<std::string, Matrix>& assignment) const {
  std::unordered_map<NodePtr, Matrix> memo;
  auto rec = [&](auto&& self, const std::shared_ptr<const Node>& n) -> Matrix {
    if (auto it = memo.find(n.get()); it != memo.end()) return it->second;
    Matrix value;
    auto arg = [&](std::size_t k) { return self(self, n->args[k]); };
    switch (n->op) {
      case Op::Generator: {
        auto it = assignment.find(n->name);
        if (it == assignment.end()) throw InputError("unbound generator \"" + n->name + "\"");
        value = it->second;
        break;
      }
      case Op::Sum: value = arg(0) + arg(1); break;
      case Op::Difference: value = arg(0) - arg(1); break;
      case Op::Product: value = arg(0) * arg(1); break;
      case Op::Negation: value = -arg(0); break;
      case Op::LeftConj:
      case Op::RightConj: {
        const Matrix a = arg(0);
        const Matrix diff = a - arg(1);
        auto inv = try_inverse(diff);
        if (!inv) throw SingularDifference("conjugating difference is singular: " + diff.str());
        value = n->op == Op::LeftConj ? diff * a * *inv : *inv * a * diff;
        break;
      }
    }
    memo.emplace(n.get(), value);
    return value;
  };
  return rec(rec, node_);
}

std::string ConjExpr::str() const {
  auto rec = [](auto&& self, const std::shared_ptr<const Node>& n) -> std::string {
    auto two = [&](const char* fn) {
      return std::string(fn) + "(" + self(self, n->args[0]) + "," + self(self, n->args[1]) + ")";
    };
    switch (n->op) {
      case Op::Generator: return n->name;
      case Op::Sum: return "(" + self(self, n->args[0]) + "+" + self(self, n->args[1]) + ")";
      case Op::Difference: return "(" + self(self, n->args[0]) + "-" + self(self, n->args[1]) + ")";
      case Op::Product: return "(" + self(self, n->args[0]) + "*" + self(self, n->args[1]) + ")";
      case Op::Negation: return "-" + self(self, n->args[0]);
      case Op::LeftConj: return two("lconj");
      case Op::RightConj: return two("rconj");
    }
    return {};
  };
  return rec(rec, node_);
}

std::size_t ConjExpr::depth() const {
  auto rec = [](auto&& self, const std::shared_ptr<const Node>& n) -> std::size_t {
    std::size_t d = 0;
    for (const auto& a : n->args) d = std::max(d, self(self, a));
    return d + 1;
  };
  return rec(rec, node_);
}

}  // namespace pseudoroots
