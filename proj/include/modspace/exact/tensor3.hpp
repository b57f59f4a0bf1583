#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "modspace/exact/matrix.hpp"

namespace modspace::exact {

/// Order-3 coefficient array indexed (i, j, k), stored lexicographically.
class Tensor3 {
 public:
  using Dims = std::array<std::size_t, 3>;

  explicit Tensor3(Field f = Field{}, Dims dims = {0, 0, 0});

  Field field() const noexcept { return field_; }
  const Dims& dims() const noexcept { return dims_; }
  std::size_t size() const noexcept { return data_.size(); }

  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return data_[(i * dims_[1] + j) * dims_[2] + k];
  }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * dims_[1] + j) * dims_[2] + k];
  }
  const std::vector<Scalar>& coeffs() const noexcept { return data_; }
  std::vector<Scalar>& coeffs() noexcept { return data_; }

  bool is_zero() const;

  /// Flattening with factor `axis` as columns: a (prod of other dims) x dims[axis] matrix.
  Matrix flattening(std::size_t axis) const;
  /// Slice T(:, :, k) as a dims[0] x dims[1] matrix.
  Matrix slice3(std::size_t k) const;

  /// (g1 (x) g2 (x) g3) acting on coefficient indices: T'(a,b,c) = sum g1[a,i] g2[b,j] g3[c,k] T(i,j,k).
  Tensor3 transformed(const Matrix& g1, const Matrix& g2, const Matrix& g3) const;

  Tensor3& operator+=(const Tensor3& o);
  friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
  friend bool operator==(const Tensor3& a, const Tensor3& b) {
    return a.field_ == b.field_ && a.dims_ == b.dims_ && a.data_ == b.data_;
  }

  /// a (x) b (x) c
  static Tensor3 outer(const Vector& a, const Vector& b, const Vector& c);

 private:
  Field field_;
  Dims dims_{};
  std::vector<Scalar> data_;
};

}  // namespace modspace::exact
