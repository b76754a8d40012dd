#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace superlie {

/// Exact rational in lowest terms with positive denominator.
using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

/// p/q in canonical form. Throws InvalidInput when q == 0.
Scalar frac(long p, long q = 1);

/// Parses "p", "-p", "p/q". Throws ParseError on anything else.
Scalar parse_scalar(std::string_view text);
/// "p/q", or "p" when q == 1.
std::string to_string(const Scalar& s);

Vector zero_vector(std::size_t n);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& s, const Vector& v);

/// Dense row-major rational matrix.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix column(const Vector& v);
  static Matrix diagonal(const Vector& d);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Vector col(std::size_t c) const;
  Vector row(std::size_t r) const;
  Matrix transpose() const;
  Scalar trace() const;
  bool is_zero() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator-(Matrix a);
Matrix operator*(const Scalar& s, Matrix a);
Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& v);

/// a·b − b·a
Matrix commutator(const Matrix& a, const Matrix& b);
/// tr(a·b) without forming the product.
Scalar trace_of_product(const Matrix& a, const Matrix& b);

/// Solves a·x = b for square nonsingular a; b may have several columns.
/// Throws SingularMatrix, DimensionMismatch.
Matrix solve_linear(const Matrix& a, const Matrix& b);
Vector solve_linear(const Matrix& a, const Vector& b);
Matrix invert(const Matrix& a);
/// Basis of {x : a·x = 0}, one vector per free column of the reduced form.
std::vector<Vector> kernel_basis(const Matrix& a);
std::size_t rank(const Matrix& a);
Scalar determinant(const Matrix& a);

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& a);

}  // namespace superlie
