#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pseudoroots {

// Arbitrary-precision rational. GMP keeps every value in lowest terms with
// a positive denominator after arithmetic; parse_rational() canonicalizes
// parsed input.
using Rational = mpq_class;

// Accepts "p" or "p/q" with optional sign; normalizes. Throws InputError.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& value);

// Square matrix over the rationals, row-major. Values are immutable in the
// sense that every operation returns a fresh matrix.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim);
  Matrix(std::size_t dim, std::vector<Rational> entries);

  static Matrix zero(std::size_t dim) { return Matrix(dim); }
  static Matrix identity(std::size_t dim);
  static Matrix scalar(std::size_t dim, const Rational& value);
  static Matrix from_rows(std::initializer_list<std::initializer_list<Rational>> rows);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t dim() const noexcept { return dim_; }
  const Rational& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }
  const std::vector<Rational>& entries() const noexcept { return entries_; }

  bool is_zero() const;
  bool is_identity() const;

  Matrix operator-() const;
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  // Row-major text, e.g. "[[0,1],[-1/2,0]]". Used as a canonical key.
  std::string str() const;

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> entries_;
};

Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_sub(const Matrix& a, const Matrix& b);
Matrix mat_mul(const Matrix& a, const Matrix& b);

// Gauss-Jordan over the rationals. Throws SingularMatrix.
Matrix mat_inverse(const Matrix& a);
std::optional<Matrix> try_inverse(const Matrix& a);
bool is_invertible(const Matrix& a);

Matrix power(const Matrix& a, unsigned exponent);

// Places blocks[r][c] at rows r*d.., cols c*d... The grid must be square and
// every block must share one dimension d.
Matrix block_assemble(const std::vector<std::vector<Matrix>>& blocks);
// The d x d block at block coordinates (row, col).
Matrix block_at(const Matrix& m, std::size_t block_dim, std::size_t row, std::size_t col);

// Operations a coefficient ring must provide. Matrix is the only model
// shipped.
template <typename R>
concept ExactRing = requires(const R& a, const R& b) {
  { a + b } -> std::same_as<R>;
  { a - b } -> std::same_as<R>;
  { a * b } -> std::same_as<R>;
  { -a } -> std::same_as<R>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { try_inverse(a) } -> std::same_as<std::optional<R>>;
};

static_assert(ExactRing<Matrix>);

}  // namespace pseudoroots
