#include "pseudoroots/matrix.hpp"

#include <utility>

#include "pseudoroots/errors.hpp"

namespace pseudoroots {

namespace {

void require_same_dim(const Matrix& a, const Matrix& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch(std::string(op) + ": dimension " + std::to_string(a.dim()) +
                            " vs " + std::to_string(b.dim()));
  }
}

bool is_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den)) {
    throw InputError("not a rational: \"" + std::string(text) + "\"");
  }
  if (num.front() == '+') num.remove_prefix(1);
  if (den.front() == '+') den.remove_prefix(1);
  mpz_class p(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw InputError("zero denominator: \"" + std::string(text) + "\"");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

Matrix::Matrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

Matrix::Matrix(std::size_t dim, std::vector<Rational> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_) {
    throw DimensionMismatch("matrix of dim " + std::to_string(dim) + " needs " +
                            std::to_string(dim * dim) + " entries, got " +
                            std::to_string(entries_.size()));
  }
  for (auto& e : entries_) e.canonicalize();
}

Matrix Matrix::identity(std::size_t dim) { return scalar(dim, 1); }

Matrix Matrix::scalar(std::size_t dim, const Rational& value) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.entries_[i * dim + i] = value;
  return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<Rational>> rows) {
  std::vector<std::vector<Rational>> copy;
  for (const auto& row : rows) copy.emplace_back(row);
  return from_rows(copy);
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t d = rows.size();
  if (d == 0) throw DimensionMismatch("matrix must have at least one row");
  std::vector<Rational> entries;
  entries.reserve(d * d);
  for (const auto& row : rows) {
    if (row.size() != d) throw DimensionMismatch("matrix rows must have length " + std::to_string(d));
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return Matrix(d, std::move(entries));
}

bool Matrix::is_zero() const {
  for (const auto& e : entries_) {
    if (e != 0) return false;
  }
  return true;
}

bool Matrix::is_identity() const { return *this == identity(dim_); }

Matrix Matrix::operator-() const {
  Matrix out(dim_);
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = -entries_[k];
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b, "add");
  Matrix out(a.dim_);
  for (std::size_t k = 0; k < a.entries_.size(); ++k) out.entries_[k] = a.entries_[k] + b.entries_[k];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b, "sub");
  Matrix out(a.dim_);
  for (std::size_t k = 0; k < a.entries_.size(); ++k) out.entries_[k] = a.entries_[k] - b.entries_[k];
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b, "mul");
  const std::size_t d = a.dim_;
  Matrix out(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      const Rational& aik = a.entries_[i * d + k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < d; ++j) {
        out.entries_[i * d + j] += aik * b.entries_[k * d + j];
      }
    }
  }
  return out;
}

Matrix operator*(const Rational& s, const Matrix& a) {
  Matrix out(a.dim_);
  for (std::size_t k = 0; k < a.entries_.size(); ++k) out.entries_[k] = s * a.entries_[k];
  return out;
}

std::string Matrix::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < dim_; ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < dim_; ++j) {
      if (j) out += ',';
      out += to_string(entries_[i * dim_ + j]);
    }
    out += ']';
  }
  out += ']';
  return out;
}

Matrix mat_add(const Matrix& a, const Matrix& b) { return a + b; }
Matrix mat_sub(const Matrix& a, const Matrix& b) { return a - b; }
Matrix mat_mul(const Matrix& a, const Matrix& b) { return a * b; }

std::optional<Matrix> try_inverse(const Matrix& a) {
  const std::size_t d = a.dim();
  // Augmented [a | I], reduced in place.
  std::vector<Rational> left = a.entries();
  std::vector<Rational> right = Matrix::identity(d).entries();
  auto at = [d](std::vector<Rational>& m, std::size_t r, std::size_t c) -> Rational& {
    return m[r * d + c];
  };
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t pivot = col;
    while (pivot < d && at(left, pivot, col) == 0) ++pivot;
    if (pivot == d) return std::nullopt;
    if (pivot != col) {
      for (std::size_t c = 0; c < d; ++c) {
        std::swap(at(left, pivot, c), at(left, col, c));
        std::swap(at(right, pivot, c), at(right, col, c));
      }
    }
    const Rational inv = 1 / at(left, col, col);
    for (std::size_t c = 0; c < d; ++c) {
      at(left, col, c) *= inv;
      at(right, col, c) *= inv;
    }
    for (std::size_t r = 0; r < d; ++r) {
      if (r == col) continue;
      const Rational factor = at(left, r, col);
      if (factor == 0) continue;
      for (std::size_t c = 0; c < d; ++c) {
        at(left, r, c) -= factor * at(left, col, c);
        at(right, r, c) -= factor * at(right, col, c);
      }
    }
  }
  return Matrix(d, std::move(right));
}

Matrix mat_inverse(const Matrix& a) {
  auto inv = try_inverse(a);
  if (!inv) throw SingularMatrix("matrix is singular: " + a.str());
  return *std::move(inv);
}

bool is_invertible(const Matrix& a) { return try_inverse(a).has_value(); }

Matrix power(const Matrix& a, unsigned exponent) {
  Matrix result = Matrix::identity(a.dim());
  for (unsigned k = 0; k < exponent; ++k) result = result * a;
  return result;
}

Matrix block_assemble(const std::vector<std::vector<Matrix>>& blocks) {
  const std::size_t n = blocks.size();
  if (n == 0) throw DimensionMismatch("block grid is empty");
  const std::size_t d = blocks[0].empty() ? 0 : blocks[0][0].dim();
  for (const auto& row : blocks) {
    if (row.size() != n) throw DimensionMismatch("block grid must be square");
    for (const auto& b : row) {
      if (b.dim() != d) throw DimensionMismatch("blocks must share one dimension");
    }
  }
  const std::size_t big = n * d;
  std::vector<Rational> entries(big * big);
  for (std::size_t br = 0; br < n; ++br) {
    for (std::size_t bc = 0; bc < n; ++bc) {
      const Matrix& b = blocks[br][bc];
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          entries[(br * d + i) * big + bc * d + j] = b(i, j);
        }
      }
    }
  }
  return Matrix(big, std::move(entries));
}

Matrix block_at(const Matrix& m, std::size_t block_dim, std::size_t row, std::size_t col) {
  if (block_dim == 0 || m.dim() % block_dim != 0 || (row + 1) * block_dim > m.dim() ||
      (col + 1) * block_dim > m.dim()) {
    throw DimensionMismatch("block index out of range");
  }
  std::vector<Rational> entries;
  entries.reserve(block_dim * block_dim);
  for (std::size_t i = 0; i < block_dim; ++i) {
    for (std::size_t j = 0; j < block_dim; ++j) {
      entries.push_back(m(row * block_dim + i, col * block_dim + j));
    }
  }
  return Matrix(block_dim, std::move(entries));
}

}  // namespace pseudoroots
