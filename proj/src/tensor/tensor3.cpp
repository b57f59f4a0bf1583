#include "modspace/exact/tensor3.hpp"

#include "modspace/error.hpp"

namespace modspace::exact {

Tensor3::Tensor3(Field f, Dims dims)
    : field_(f), dims_(dims), data_(dims[0] * dims[1] * dims[2], Scalar(f)) {}

bool Tensor3::is_zero() const {
  for (const auto& c : data_)
    if (!c.is_zero()) return false;
  return true;
}

Matrix Tensor3::flattening(std::size_t axis) const {
  if (axis > 2) throw ShapeError("tensor axis out of range");
  const std::size_t other = size() / (dims_[axis] == 0 ? 1 : dims_[axis]);
  Matrix m(field_, dims_[axis] == 0 ? 0 : other, dims_[axis]);
  for (std::size_t i = 0; i < dims_[0]; ++i)
    for (std::size_t j = 0; j < dims_[1]; ++j)
      for (std::size_t k = 0; k < dims_[2]; ++k) {
        const Scalar& v = (*this)(i, j, k);
        switch (axis) {
          case 0: m(j * dims_[2] + k, i) = v; break;
          case 1: m(i * dims_[2] + k, j) = v; break;
          default: m(i * dims_[1] + j, k) = v; break;
        }
      }
  return m;
}

Matrix Tensor3::slice3(std::size_t k) const {
  Matrix m(field_, dims_[0], dims_[1]);
  for (std::size_t i = 0; i < dims_[0]; ++i)
    for (std::size_t j = 0; j < dims_[1]; ++j) m(i, j) = (*this)(i, j, k);
  return m;
}

Tensor3 Tensor3::transformed(const Matrix& g1, const Matrix& g2, const Matrix& g3) const {
  if (g1.cols() != dims_[0] || g2.cols() != dims_[1] || g3.cols() != dims_[2])
    throw ShapeError("tensor transform shape mismatch");
  // apply one factor at a time
  Tensor3 a(field_, {g1.rows(), dims_[1], dims_[2]});
  for (std::size_t p = 0; p < g1.rows(); ++p)
    for (std::size_t i = 0; i < dims_[0]; ++i) {
      if (g1(p, i).is_zero()) continue;
      for (std::size_t j = 0; j < dims_[1]; ++j)
        for (std::size_t k = 0; k < dims_[2]; ++k) a(p, j, k) += g1(p, i) * (*this)(i, j, k);
    }
  Tensor3 b(field_, {g1.rows(), g2.rows(), dims_[2]});
  for (std::size_t p = 0; p < g1.rows(); ++p)
    for (std::size_t q = 0; q < g2.rows(); ++q)
      for (std::size_t j = 0; j < dims_[1]; ++j) {
        if (g2(q, j).is_zero()) continue;
        for (std::size_t k = 0; k < dims_[2]; ++k) b(p, q, k) += g2(q, j) * a(p, j, k);
      }
  Tensor3 c(field_, {g1.rows(), g2.rows(), g3.rows()});
  for (std::size_t p = 0; p < g1.rows(); ++p)
    for (std::size_t q = 0; q < g2.rows(); ++q)
      for (std::size_t s = 0; s < g3.rows(); ++s)
        for (std::size_t k = 0; k < dims_[2]; ++k)
          if (!g3(s, k).is_zero()) c(p, q, s) += g3(s, k) * b(p, q, k);
  return c;
}

Tensor3& Tensor3::operator+=(const Tensor3& o) {
  if (dims_ != o.dims_) throw ShapeError("tensor sum shape mismatch");
  for (std::size_t idx = 0; idx < data_.size(); ++idx) data_[idx] += o.data_[idx];
  return *this;
}

Tensor3 Tensor3::outer(const Vector& a, const Vector& b, const Vector& c) {
  if (a.empty() || b.empty() || c.empty()) throw ShapeError("outer product of empty vector");
  Tensor3 t(a.front().field(), {a.size(), b.size(), c.size()});
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      for (std::size_t k = 0; k < c.size(); ++k) t(i, j, k) = a[i] * b[j] * c[k];
  return t;
}

}  // namespace modspace::exact
