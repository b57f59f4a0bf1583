#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "modspace/exact/scalar.hpp"

namespace modspace::exact {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over a single exact field.
class Matrix {
 public:
  explicit Matrix(Field f = Field{}, std::size_t rows = 0, std::size_t cols = 0);

  static Matrix identity(Field f, std::size_t n);
  static Matrix diagonal(const Vector& diag);
  /// Integer literal rows, mainly for fixtures.
  static Matrix from_rows(Field f, std::initializer_list<std::initializer_list<long long>> rows);
  static Matrix from_columns(Field f, std::size_t rows, const std::vector<Vector>& cols);
  static Matrix column_vector(const Vector& v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Field field() const noexcept { return field_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<Scalar>& entries() const noexcept { return data_; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

  Matrix transpose() const;
  Matrix scaled(const Scalar& s) const;
  bool is_zero() const;
  bool is_square() const noexcept { return rows_ == cols_; }

  /// Throws FieldMismatch if any entry disagrees with field().
  void require_uniform_field() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix kron(const Matrix& a, const Matrix& b);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix commutator(const Matrix& a, const Matrix& b);
bool is_zero_vector(const Vector& v);
Vector zero_vector(Field f, std::size_t n);

/// Row-major flattening of a matrix into a vector and back.
Vector vec(const Matrix& m);
Matrix unvec(const Vector& v, std::size_t rows, std::size_t cols, std::size_t offset = 0);

}  // namespace modspace::exact
