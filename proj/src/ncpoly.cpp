#include "pseudoroots/ncpoly.hpp"

#include <algorithm>
#include <utility>

#include "pseudoroots/errors.hpp"

namespace pseudoroots {

namespace {

void require_dim(std::size_t expected, std::size_t got, const char* op) {
  if (expected != got) {
    throw DimensionMismatch(std::string(op) + ": dimension " + std::to_string(expected) +
                            " vs " + std::to_string(got));
  }
}

}  // namespace

Poly::Poly(std::size_t dim, std::vector<Matrix> coeffs) : dim_(dim), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) require_dim(dim_, c.dim(), "poly");
  normalize();
}

Poly Poly::constant(const Matrix& c) { return Poly(c.dim(), {c}); }

Poly Poly::linear(const Matrix& x) { return Poly(x.dim(), {Matrix::identity(x.dim()), -x}); }

void Poly::normalize() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Matrix& m) { return !m.is_zero(); });
  coeffs_.erase(coeffs_.begin(), first);
}

std::size_t Poly::degree() const {
  if (is_zero()) throw PreconditionError("the zero polynomial has no degree");
  return coeffs_.size() - 1;
}

bool Poly::is_monic() const { return !is_zero() && coeffs_.front().is_identity(); }

Matrix Poly::coeff_of_power(std::size_t power) const {
  if (power >= coeffs_.size()) return Matrix::zero(dim_);
  return coeffs_[coeffs_.size() - 1 - power];
}

Poly operator+(const Poly& p, const Poly& q) {
  require_dim(p.dim_, q.dim_, "poly add");
  const std::size_t len = std::max(p.coeffs_.size(), q.coeffs_.size());
  std::vector<Matrix> out;
  out.reserve(len);
  for (std::size_t k = len; k-- > 0;) out.push_back(p.coeff_of_power(k) + q.coeff_of_power(k));
  return Poly(p.dim_, std::move(out));
}

Poly operator-(const Poly& p, const Poly& q) {
  require_dim(p.dim_, q.dim_, "poly sub");
  const std::size_t len = std::max(p.coeffs_.size(), q.coeffs_.size());
  std::vector<Matrix> out;
  out.reserve(len);
  for (std::size_t k = len; k-- > 0;) out.push_back(p.coeff_of_power(k) - q.coeff_of_power(k));
  return Poly(p.dim_, std::move(out));
}

// t is central, so the product is a coefficient convolution that keeps the
// factor order inside every term.
Poly operator*(const Poly& p, const Poly& q) {
  require_dim(p.dim_, q.dim_, "poly mul");
  if (p.is_zero() || q.is_zero()) return Poly(p.dim_);
  std::vector<Matrix> out(p.coeffs_.size() + q.coeffs_.size() - 1, Matrix::zero(p.dim_));
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) {
      out[i + j] = out[i + j] + p.coeffs_[i] * q.coeffs_[j];
    }
  }
  return Poly(p.dim_, std::move(out));
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string out;
  const std::size_t n = coeffs_.size() - 1;
  for (std::size_t j = 0; j <= n; ++j) {
    const Matrix& c = coeffs_[j];
    if (c.is_zero()) continue;
    const std::size_t power = n - j;
    if (!out.empty()) out += " + ";
    const bool unit = c.is_identity();
    if (!unit || power == 0) out += c.str();
    if (power > 0) {
      if (!unit) out += ' ';
      out += power == 1 ? "t" : "t^" + std::to_string(power);
    }
  }
  return out;
}

Poly poly_mul(const Poly& p, const Poly& q) { return p * q; }

Matrix right_eval(const Poly& p, const Matrix& x) {
  require_dim(p.dim(), x.dim(), "right_eval");
  // Horner: ((a_0 x + a_1) x + a_2) ...
  Matrix acc = Matrix::zero(x.dim());
  for (const auto& a : p.coeffs()) acc = acc * x + a;
  return acc;
}

Matrix left_eval(const Poly& p, const Matrix& x) {
  require_dim(p.dim(), x.dim(), "left_eval");
  Matrix acc = Matrix::zero(x.dim());
  for (const auto& a : p.coeffs()) acc = x * acc + a;
  return acc;
}

LinearDivision left_divide_linear(const Poly& b, const Matrix& x) {
  require_dim(b.dim(), x.dim(), "left_divide_linear");
  if (b.is_zero() || b.degree() < 1) {
    throw PreconditionError("left_divide_linear needs a dividend of degree >= 1");
  }
  // (t - x)(q_0 t^{n-1} + ... + q_{n-1}) has t^{n-k} coefficient q_k - x q_{k-1}.
  const auto& c = b.coeffs();
  const std::size_t n = c.size() - 1;
  std::vector<Matrix> q;
  q.reserve(n);
  q.push_back(c[0]);
  for (std::size_t k = 1; k < n; ++k) q.push_back(c[k] + x * q.back());
  Matrix remainder = c[n] + x * q.back();
  return {Poly(b.dim(), std::move(q)), std::move(remainder)};
}

PolyDivision right_divide_monic(const Poly& p, const Poly& b) {
  require_dim(p.dim(), b.dim(), "right_divide_monic");
  if (!b.is_monic()) throw PreconditionError("right_divide_monic: divisor is not monic");
  const std::size_t db = b.degree();
  const std::size_t dim = p.dim();
  if (!p.is_zero() && p.degree() < db) {
    throw PreconditionError("right_divide_monic: divisor degree exceeds dividend degree");
  }
  Poly remainder = p;
  std::vector<Matrix> quotient;
  while (!remainder.is_zero() && remainder.degree() >= db) {
    const std::size_t shift = remainder.degree() - db;
    const Matrix lead = remainder.coeffs().front();
    if (quotient.empty()) quotient.assign(shift + 1, Matrix::zero(dim));
    quotient[quotient.size() - 1 - shift] = lead;
    std::vector<Matrix> term(shift + 1, Matrix::zero(dim));
    term.front() = lead;
    remainder = remainder - Poly(dim, std::move(term)) * b;
  }
  return {Poly(dim, std::move(quotient)), std::move(remainder)};
}

Poly from_linear_factors(std::span<const Matrix> xs, std::size_t dim) {
  Poly out = Poly::one(dim);
  for (const auto& x : xs) out = out * Poly::linear(x);
  return out;
}

}  // namespace pseudoroots
