#ifndef LIEBOUND_MATRIX_HPP
#define LIEBOUND_MATRIX_HPP

#include <liebound/scalar.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace liebound {

/// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const Vector& entries);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  const std::vector<Scalar>& entries() const noexcept { return entries_; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Matrix transpose() const;

  // Matrix-vector product (column convention).
  Vector apply(const Vector& v) const;

  Scalar trace() const;
  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& s, const Matrix& m);

Matrix power(const Matrix& m, std::uint64_t exponent);

// Stacks a on top of b (equal column counts).
Matrix vstack(const Matrix& a, const Matrix& b);

// Lexicographic comparison of row-major entries; shapes compared first.
bool lex_less(const Matrix& a, const Matrix& b);

std::string to_string(const Matrix& m);

}  // namespace liebound

#endif  // LIEBOUND_MATRIX_HPP
