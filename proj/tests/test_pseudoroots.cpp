#include <numeric>

#include "doctest.h"
#include "oracles.hpp"
#include "pseudoroots/errors.hpp"
#include "pseudoroots/pseudoroots.hpp"

using namespace pseudoroots;

namespace {

Matrix m2(long a, long b, long c, long d) { return Matrix::from_rows({{a, b}, {c, d}}); }

RootSet nilpotent_pair() { return RootSet({m2(0, 1, 0, 0), m2(0, 0, 1, 0)}); }

// Monic Q of degree |A| with every x_a (a in A) as a right root, found by
// solving the linear system for its coefficients directly.
Poly annihilator(const RootSet& rs, SubsetMask set) {
  const auto elems = subset_elements(set);
  const std::size_t k = elems.size(), d = rs.dim();
  if (k == 0) return Poly::one(d);
  // c V = -r with V[j][a] = x_a^{k-1-j}, r[a] = x_a^k, c = (c_1 .. c_k).
  std::vector<std::vector<Matrix>> v(k, std::vector<Matrix>(k));
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t a = 0; a < k; ++a) v[j][a] = power(rs.root(elems[a]), static_cast<unsigned>(k - 1 - j));
  }
  std::vector<std::vector<Matrix>> r(k, std::vector<Matrix>(k, Matrix::zero(d)));
  for (std::size_t a = 0; a < k; ++a) r[0][a] = -power(rs.root(elems[a]), static_cast<unsigned>(k));
  const Matrix c = block_assemble(r) * mat_inverse(block_assemble(v));
  std::vector<Matrix> coeffs{Matrix::identity(d)};
  for (std::size_t j = 0; j < k; ++j) coeffs.push_back(block_at(c, d, 0, j));
  return Poly(d, coeffs);
}

}  // namespace

TEST_CASE("nilpotent pair") {
  const RootSet rs = nilpotent_pair();
  const Matrix& x1 = rs.root(1);
  const Matrix& x2 = rs.root(2);
  CHECK(rs.genericity().generic);
  CHECK(pseudo_root(rs, 0b01, 2) == -x1);
  CHECK(pseudo_root(rs, 0b10, 1) == -x2);
  CHECK(pseudo_root(rs, 0, 1) == x1);
  const PseudoRootTable table = build_table(rs);
  CHECK(table.entries().size() == 4);
  const Poly p = canonical_polynomial(table);
  CHECK(p == Poly(2, {Matrix::identity(2), Matrix::zero(2), Matrix::zero(2)}));
  CHECK(right_eval(p, x1).is_zero());
  CHECK(right_eval(p, x2).is_zero());
}

TEST_CASE("quasideterminant small cases") {
  const RootSet rs = nilpotent_pair();
  const int one[] = {1};
  const int twelve[] = {1, 2};
  CHECK(vandermonde_quasidet(rs, one).is_identity());
  CHECK(vandermonde_quasidet(rs, twelve) == rs.root(2) - rs.root(1));
  const int repeat[] = {1, 1};
  const int out_of_range[] = {1, 3};
  CHECK_THROWS_AS(vandermonde_quasidet(rs, repeat), PreconditionError);
  CHECK_THROWS_AS(vandermonde_quasidet(rs, out_of_range), PreconditionError);
  CHECK(vandermonde_matrix(rs, twelve).dim() == 4);
}

TEST_CASE("non-generic root sets") {
  const RootSet same({m2(1, 2, 3, 4), m2(1, 2, 3, 4)});
  const auto g = is_generic(same);
  CHECK_FALSE(g.generic);
  CHECK_FALSE(g.failing.empty());
  CHECK_THROWS_AS(build_table(same), SingularVandermonde);
  // Differences of commuting scalars vanish only when the scalars agree.
  const RootSet scalars({Matrix::scalar(2, 1), Matrix::scalar(2, 2)});
  CHECK(scalars.genericity().generic);
  CHECK_THROWS_AS(RootSet({}), PreconditionError);
  CHECK_THROWS_AS(RootSet({Matrix::identity(2), Matrix::identity(3)}), DimensionMismatch);
}

TEST_CASE("pseudo-roots against the annihilator oracle") {
  std::mt19937_64 rng(31);
  for (int n = 2; n <= 4; ++n) {
    for (int c = 0; c < 3; ++c) {
      const RootSet rs = random_generic_roots(n, 2, rng);
      const PseudoRootTable table = build_table(rs);
      for (const auto& [edge, y] : table.entries()) {
        CAPTURE(edge.str());
        const Poly q = annihilator(rs, edge.set);
        for (int a : subset_elements(edge.set)) CHECK(right_eval(q, rs.root(a)).is_zero());
        CHECK(right_eval(Poly::linear(y) * q, rs.root(edge.index)).is_zero());
      }
    }
  }
}

TEST_CASE("ordering independence of pseudo-roots and of P") {
  std::mt19937_64 rng(32);
  const RootSet rs = random_generic_roots(4, 2, rng);
  std::vector<int> a{1, 2, 4};
  const Matrix first = pseudo_root_ordered(rs, a, 3);
  while (std::next_permutation(a.begin(), a.end())) CHECK(pseudo_root_ordered(rs, a, 3) == first);
  const PseudoRootTable table = build_table(rs);
  const Poly p = canonical_polynomial(table);
  std::vector<int> ordering{1, 2, 3, 4};
  do {
    CHECK(from_linear_factors(defining_factors(table, ordering), 2) == p);
  } while (std::next_permutation(ordering.begin(), ordering.end()));
  for (int i = 1; i <= 4; ++i) CHECK(right_eval(p, rs.root(i)).is_zero());
  CHECK(canonical_polynomial(rs) == p);
  const int bad[] = {1, 1, 2, 3};
  CHECK_THROWS_AS(defining_factors(table, bad), PreconditionError);
}

TEST_CASE("diamond relations hold in the table") {
  std::mt19937_64 rng(33);
  const PseudoRootTable table = build_table(random_generic_roots(3, 3, rng));
  CHECK_FALSE(check_diamonds(table).has_value());
  PseudoRootTable broken = table;
  broken.set(GammaEdgeLabel{0b001, 2}, Matrix::zero(3));
  CHECK(check_diamonds(broken).has_value());
}

TEST_CASE("d_op and u_op") {
  const Matrix a1 = -m2(0, 1, 0, 0), a2 = -m2(0, 0, 1, 0);
  // Nilpotent square: x_{{1},2} = -x1 continues to x_{{},1} = x1, and
  // x_{{2},1} = -x2 to x2.
  const auto [b1, b2] = d_op(-m2(0, 1, 0, 0), -m2(0, 0, 1, 0));
  CHECK(b1 == m2(0, 1, 0, 0));
  CHECK(b2 == m2(0, 0, 1, 0));
  CHECK_THROWS_AS(d_op(a1, a1), SingularDifference);
  CHECK_THROWS_AS(u_op(a2, a2), SingularDifference);

  std::mt19937_64 rng(34);
  for (int k = 0; k < 200; ++k) {
    const Matrix x = oracle::random_matrix(2, rng), y = oracle::random_matrix(2, rng);
    if (!is_invertible(x - y)) continue;
    const auto [p, q] = d_op(x, y);
    CHECK(x + p == y + q);
    CHECK(x * p == y * q);
    if (!is_invertible(p - q)) continue;
    const auto [r, s] = u_op(p, q);
    CHECK(r == x);
    CHECK(s == y);
  }
}

TEST_CASE("labeled completion reproduces the table") {
  std::mt19937_64 rng(35);
  const RootSet rs = random_generic_roots(3, 2, rng);
  const PseudoRootTable table = build_table(rs);
  const Digraph g = boolean_lattice(3);
  std::vector<EdgeIndex> star;
  for (int k = 1; k <= 3; ++k) star.push_back(g.edge(GammaEdgeLabel{0, k}.str()));
  const LabeledCompletion lc = labeled_completion(labels_from_table(g, table, star));
  CHECK(lc.labels.size() == g.edge_count());
  for (const auto& [e, label] : lc.labels.labels()) {
    CHECK(label.value == table.at(parse_gamma_edge(g.edge_id(e))));
    CHECK(label.expr.eval(lc.labels.assignment()) == label.value);
  }
}

TEST_CASE("inconsistent labels are reported") {
  const RootSet rs = nilpotent_pair();
  const Digraph g = boolean_lattice(2);
  LabeledEdgeSet ls(g);
  ls.add(g.edge("{}:1"), rs.root(1));
  ls.add(g.edge("{}:2"), rs.root(2));
  ls.add(g.edge("{1}:2"), Matrix::identity(2));
  CHECK_THROWS_AS(labeled_completion(ls), InconsistentLabels);
  CHECK_THROWS_AS(ls.add(g.edge("{2}:1"), Matrix::identity(3)), DimensionMismatch);
}

TEST_CASE("derive_factorization") {
  std::mt19937_64 rng(36);
  const RootSet rs = random_generic_roots(3, 2, rng);
  const PseudoRootTable table = build_table(rs);
  const Digraph g = boolean_lattice(3);
  auto pick = [&](std::initializer_list<const char*> ids) {
    std::vector<EdgeIndex> out;
    for (const char* id : ids) out.push_back(g.edge(id));
    return labels_from_table(g, table, out);
  };
  const Factorization f = derive_factorization(pick({"{1}:2", "{2}:1", "{1}:3"}));
  CHECK(f.factors.size() == 3);
  CHECK(f.polynomial == canonical_polynomial(table));
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(f.traces[k].eval(pick({"{1}:2", "{2}:1", "{1}:3"}).assignment()) == f.factors[k]);
  }
  CHECK_THROWS_AS(derive_factorization(pick({"{1,2}:3", "{3}:2", "{}:1"})), NotSufficient);
  CHECK_THROWS_AS(derive_factorization(LabeledEdgeSet(g)), NotSufficient);
}

TEST_CASE("scalar specialization") {
  const std::vector<Rational> s{Rational(1, 2), Rational(-3), Rational(5, 7)};
  std::vector<Matrix> roots;
  for (const auto& q : s) roots.push_back(Matrix::scalar(1, q));
  const PseudoRootTable table = build_table(RootSet(roots));
  const auto spec = scalar_specialize(table, s);
  for (const auto& [edge, value] : spec) {
    CHECK(value == s[static_cast<std::size_t>(edge.index - 1)]);
    CHECK(table.at(edge)(0, 0) == value);
  }
  const Poly p = canonical_polynomial(table);
  const Rational e1 = s[0] + s[1] + s[2];
  const Rational e2 = s[0] * s[1] + s[0] * s[2] + s[1] * s[2];
  const Rational e3 = s[0] * s[1] * s[2];
  CHECK(p.coeffs()[1](0, 0) == -e1);
  CHECK(p.coeffs()[2](0, 0) == e2);
  CHECK(p.coeffs()[3](0, 0) == -e3);

  const Digraph g = boolean_lattice(3);
  const std::vector<std::string> path_ids{"{1,2}:3", "{1}:2", "{}:1"};
  CHECK(specializes_to_defining_set(scalar_specialize(EdgeSet::from_ids(g, path_ids), s), s));
  const std::vector<std::string> repeat_ids{"{1}:2", "{}:2", "{}:1"};
  CHECK_FALSE(specializes_to_defining_set(scalar_specialize(EdgeSet::from_ids(g, repeat_ids), s), s));
  const std::vector<Rational> dup{1, 1, 2};
  CHECK_THROWS_AS(scalar_specialize(table, dup), PreconditionError);
}

TEST_CASE("random roots are deterministic in the seed") {
  std::mt19937_64 a(99), b(99);
  const RootSet x = random_generic_roots(3, 2, a);
  const RootSet y = random_generic_roots(3, 2, b);
  CHECK(x.roots() == y.roots());
  CHECK(x.genericity().generic);
}
