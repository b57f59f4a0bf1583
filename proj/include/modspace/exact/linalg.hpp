#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "modspace/exact/matrix.hpp"

namespace modspace::exact {

struct RowEchelon {
  Matrix reduced;                    // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
  std::size_t rank() const noexcept { return pivots.size(); }
};

RowEchelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);

struct RankKernel {
  std::size_t rank = 0;
  std::vector<Vector> kernel_basis;  // spans {v : M v = 0}
};

/// Rank and a nullspace basis; each basis vector is checked against M v = 0.
RankKernel rank_and_kernel(const Matrix& m);

/// Kernel basis vectors as the columns of a cols(m) x nullity matrix.
Matrix kernel_matrix(const Matrix& m);

/// X with A X = B, or nullopt when rank [A|B] > rank A.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& a);
Scalar determinant(const Matrix& a);

/// Incrementally maintained echelon basis of a subspace of k^n.
class Span {
 public:
  Span(Field f, std::size_t ambient);

  /// Adds v; returns true if it enlarged the span.
  bool add(const Vector& v);
  bool contains(const Vector& v) const;
  std::size_t dim() const noexcept { return rows_.size(); }
  std::size_t ambient() const noexcept { return n_; }
  Field field() const noexcept { return field_; }
  /// Basis vectors in insertion order (original, unreduced).
  const std::vector<Vector>& inserted() const noexcept { return inserted_; }
  /// Basis as the columns of an ambient x dim matrix.
  Matrix basis_matrix() const;

 private:
  Vector reduce(Vector v) const;

  Field field_;
  std::size_t n_;
  std::vector<Vector> rows_;          // echelon rows, pivot entry normalized to one
  std::vector<std::size_t> pivots_;
  std::vector<Vector> inserted_;
};

/// Builds a homogeneous linear system over blocks of unknowns laid out
/// consecutively; rows are added one equation at a time.
class LinearSystem {
 public:
  explicit LinearSystem(Field f) : field_(f) {}

  /// Registers a block of rows*cols unknowns (row-major) and returns its offset.
  std::size_t add_block(std::size_t rows, std::size_t cols);
  std::size_t unknowns() const noexcept { return unknowns_; }
  Field field() const noexcept { return field_; }

  /// Starts a new group of `count` equations; returns the index of the first.
  std::size_t add_equations(std::size_t count);

  /// Adds the coefficients of vec(L * U * R) to equations [first, first + rows(L)*cols(R)),
  /// where U is the block at `offset` with shape cols(L) x rows(R).
  void add_sandwich(std::size_t first, const Matrix& left, std::size_t offset,
                    const Matrix& right, const Scalar& sign);

  Matrix matrix() const;

 private:
  Field field_;
  std::size_t unknowns_ = 0;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> equations_;
};

}  // namespace modspace::exact
