#pragma once

#include <cstddef>
#include <vector>

#include "modspace/exact/poly_matrix.hpp"
#include "modspace/exact/tensor3.hpp"

namespace modspace::exact {

/// Matrix whose entries are polynomials in the family parameter t.
using ParamMatrix = PolyMatrix;

/// Tensor whose coefficients are polynomials in t.
class ParamTensor {
 public:
  explicit ParamTensor(Field f = Field{}, Tensor3::Dims dims = {0, 0, 0});
  static ParamTensor constant(const Tensor3& t);

  Field field() const noexcept { return field_; }
  const Tensor3::Dims& dims() const noexcept { return dims_; }

  Poly& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return data_[(i * dims_[1] + j) * dims_[2] + k];
  }
  const Poly& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * dims_[1] + j) * dims_[2] + k];
  }
  const std::vector<Poly>& coeffs() const noexcept { return data_; }

 private:
  Field field_;
  Tensor3::Dims dims_{};
  std::vector<Poly> data_;
};

Matrix evaluate_param(const ParamMatrix& family, const Scalar& t0);
Tensor3 evaluate_param(const ParamTensor& family, const Scalar& t0);

}  // namespace modspace::exact
