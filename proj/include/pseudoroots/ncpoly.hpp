#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "pseudoroots/matrix.hpp"

namespace pseudoroots {

// Polynomial a_0 t^n + a_1 t^{n-1} + ... + a_n in a central variable t with
// matrix coefficients. Coefficients are stored leading-first. The zero
// polynomial has no coefficients and no degree.
class Poly {
 public:
  // The zero polynomial of the given coefficient dimension.
  explicit Poly(std::size_t dim) : dim_(dim) {}
  // Leading zeros are stripped. Throws DimensionMismatch on mixed dims.
  Poly(std::size_t dim, std::vector<Matrix> coeffs);

  static Poly zero(std::size_t dim) { return Poly(dim); }
  static Poly one(std::size_t dim) { return constant(Matrix::identity(dim)); }
  static Poly constant(const Matrix& c);
  // t - x
  static Poly linear(const Matrix& x);

  std::size_t dim() const noexcept { return dim_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  // Throws PreconditionError for the zero polynomial.
  std::size_t degree() const;
  bool is_monic() const;
  const std::vector<Matrix>& coeffs() const noexcept { return coeffs_; }
  // Coefficient of t^power; zero matrix when above the degree.
  Matrix coeff_of_power(std::size_t power) const;

  friend Poly operator+(const Poly& p, const Poly& q);
  friend Poly operator-(const Poly& p, const Poly& q);
  friend Poly operator*(const Poly& p, const Poly& q);
  friend bool operator==(const Poly& p, const Poly& q) = default;

  // "t^2 + [[..]] t + [[..]]" style, for reports.
  std::string str() const;

 private:
  void normalize();

  std::size_t dim_ = 0;
  std::vector<Matrix> coeffs_;
};

Poly poly_mul(const Poly& p, const Poly& q);

// sum_j a_j x^{n-j}; zero iff x is a right root.
Matrix right_eval(const Poly& p, const Matrix& x);
// sum_j x^{n-j} a_j; zero iff x is a left root.
Matrix left_eval(const Poly& p, const Matrix& x);

struct LinearDivision {
  Poly quotient;
  Matrix remainder;
};

// b = (t - x) * quotient + remainder. The remainder equals left_eval(b, x).
LinearDivision left_divide_linear(const Poly& b, const Matrix& x);

struct PolyDivision {
  Poly quotient;
  Poly remainder;
};

// p = quotient * b + remainder with deg remainder < deg b. b must be monic.
PolyDivision right_divide_monic(const Poly& p, const Poly& b);

// (t - xs[0]) (t - xs[1]) ... ; the empty product is 1 of dimension dim.
Poly from_linear_factors(std::span<const Matrix> xs, std::size_t dim);

}  // namespace pseudoroots
