#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <vector>

#include "dgrep/scalar.hpp"

namespace dgrep {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix of exact scalars. All entries share the matrix field.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Field f = {});

  static Matrix zero(std::size_t rows, std::size_t cols, Field f = {}) { return {rows, cols, f}; }
  static Matrix identity(std::size_t n, Field f = {});
  static Matrix scalar(std::size_t n, const Scalar& s);
  static Matrix from_ints(std::initializer_list<std::initializer_list<long>> rows, Field f = {});
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols, Field f = {});
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows, Field f = {});
  /// Inverse of flatten(): reshape a row-major vector.
  static Matrix unflatten(const Vector& v, std::size_t rows, std::size_t cols, Field f = {});

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Field field() const { return field_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const Vector& flatten() const { return data_; }
  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  Matrix transpose() const;

  bool is_zero() const;
  bool is_identity() const;
  std::optional<Matrix> inverse() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  Matrix operator-() const;

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  Vector apply(const Vector& v) const;

private:
  void check_same_shape(const Matrix& o, const char* what) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Field field_;
  Vector data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix block_diagonal(const Matrix& a, const Matrix& b);

std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace dgrep
