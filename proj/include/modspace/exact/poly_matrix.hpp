#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "modspace/exact/poly.hpp"

namespace modspace::exact {

/// Matrix with univariate polynomial entries. Used both for k[x]-module
/// presentations and for families depending polynomially on a parameter t.
class PolyMatrix {
 public:
  explicit PolyMatrix(Field f = Field{}, std::size_t rows = 0, std::size_t cols = 0);
  /// Constant embedding of a scalar matrix.
  static PolyMatrix constant(const Matrix& m);
  static PolyMatrix identity(Field f, std::size_t n);
  /// x*I - a
  static PolyMatrix characteristic(const Matrix& a);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Field field() const noexcept { return field_; }

  Poly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Poly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  /// Largest entry degree (-1 for the zero matrix).
  int degree() const;
  /// Largest entry degree in column j.
  int column_degree(std::size_t j) const;
  bool is_zero() const;

  /// Entrywise evaluation.
  Matrix eval(const Scalar& at) const;
  /// Coefficient matrix of x^k.
  Matrix coefficient(std::size_t k) const;

  PolyMatrix transpose() const;
  PolyMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  std::vector<Poly> column(std::size_t j) const;
  void swap_columns(std::size_t a, std::size_t b);
  /// column[dst] += f * column[src]
  void add_column_multiple(std::size_t dst, std::size_t src, const Poly& f);

  PolyMatrix& operator+=(const PolyMatrix& o);
  friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

  std::string to_string(char var = 'x') const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Poly> data_;
};

PolyMatrix hstack(const PolyMatrix& a, const PolyMatrix& b);

}  // namespace modspace::exact
