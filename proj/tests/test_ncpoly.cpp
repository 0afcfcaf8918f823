#include "doctest.h"
#include "oracles.hpp"
#include "pseudoroots/errors.hpp"
#include "pseudoroots/ncpoly.hpp"

using namespace pseudoroots;

namespace {
Matrix m2(long a, long b, long c, long d) { return Matrix::from_rows({{a, b}, {c, d}}); }
}  // namespace

TEST_CASE("construction strips leading zeros") {
  const Poly p(2, {Matrix::zero(2), Matrix::zero(2), Matrix::identity(2)});
  CHECK(p.degree() == 0);
  CHECK(p == Poly::one(2));
  CHECK(Poly(2, {Matrix::zero(2)}).is_zero());
  CHECK_THROWS_AS(Poly::zero(2).degree(), PreconditionError);
  CHECK_THROWS_AS(Poly(2, {Matrix::identity(3)}), DimensionMismatch);
}

TEST_CASE("(t - a)(t - b) by hand") {
  const Matrix a = m2(1, 2, 0, 1), b = m2(0, 1, 1, 0);
  const Poly p = Poly::linear(a) * Poly::linear(b);
  REQUIRE(p.degree() == 2);
  CHECK(p.is_monic());
  CHECK(p.coeff_of_power(2).is_identity());
  CHECK(p.coeff_of_power(1) == -(a + b));
  CHECK(p.coeff_of_power(0) == a * b);
  CHECK(p.coeff_of_power(7).is_zero());
  CHECK(right_eval(p, b).is_zero());
  CHECK(left_eval(p, a).is_zero());
  CHECK_FALSE(right_eval(p, a).is_zero());
}

TEST_CASE("empty product is one") {
  CHECK(from_linear_factors({}, 3) == Poly::one(3));
}

TEST_CASE("left_divide_linear reconstructs") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 50; ++k) {
    std::vector<Matrix> cs;
    for (int j = 0; j < 4; ++j) cs.push_back(oracle::random_matrix(2, rng));
    const Poly b(2, cs);
    if (b.is_zero() || b.degree() == 0) continue;
    const Matrix x = oracle::random_matrix(2, rng);
    const auto [q, r] = left_divide_linear(b, x);
    CHECK(Poly::linear(x) * q + Poly::constant(r) == b);
    CHECK(r == left_eval(b, x));
  }
  CHECK_THROWS_AS(left_divide_linear(Poly::one(2), Matrix::zero(2)), PreconditionError);
}

TEST_CASE("right_divide_monic reconstructs") {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 40; ++k) {
    std::vector<Matrix> cs;
    for (int j = 0; j < 5; ++j) cs.push_back(oracle::random_matrix(2, rng));
    const Poly p(2, cs);
    const Poly b = Poly::linear(oracle::random_matrix(2, rng)) * Poly::linear(oracle::random_matrix(2, rng));
    if (p.is_zero() || p.degree() < b.degree()) continue;
    const auto [q, r] = right_divide_monic(p, b);
    CHECK(q * b + r == p);
    CHECK((r.is_zero() || r.degree() < b.degree()));
  }
  const Poly not_monic(2, {Rational(2) * Matrix::identity(2), Matrix::zero(2)});
  CHECK_THROWS_AS(right_divide_monic(Poly::linear(Matrix::zero(2)) * Poly::linear(Matrix::zero(2)), not_monic),
                  PreconditionError);
}

TEST_CASE("right_eval of a product by its right factor's root") {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 30; ++k) {
    const Matrix a = oracle::random_matrix(3, rng), b = oracle::random_matrix(3, rng), c = oracle::random_matrix(3, rng);
    const Matrix factors[] = {a, b, c};
    const Poly p = from_linear_factors(factors, 3);
    CHECK(right_eval(p, c).is_zero());
    CHECK(left_eval(p, a).is_zero());
    CHECK(p == Poly::linear(a) * (Poly::linear(b) * Poly::linear(c)));
  }
}

TEST_CASE("str") {
  const Poly p = Poly::linear(Matrix::zero(1)) * Poly::linear(Matrix::zero(1));
  CHECK(p.str().find("t^2") != std::string::npos);
}
