#include "modspace/exact/poly_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "modspace/error.hpp"

namespace modspace::exact {

PolyMatrix::PolyMatrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Poly(f)) {}

PolyMatrix PolyMatrix::constant(const Matrix& m) {
  PolyMatrix p(m.field(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) p(i, j) = Poly(m(i, j));
  return p;
}

PolyMatrix PolyMatrix::identity(Field f, std::size_t n) {
  return constant(Matrix::identity(f, n));
}

PolyMatrix PolyMatrix::characteristic(const Matrix& a) {
  if (!a.is_square()) throw ShapeError("characteristic matrix of non-square matrix");
  PolyMatrix p(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      p(i, j) = Poly(-a(i, j));
      if (i == j) p(i, j) += Poly::variable(a.field());
    }
  return p;
}

int PolyMatrix::degree() const {
  int d = -1;
  for (const auto& e : data_) d = std::max(d, e.degree());
  return d;
}

int PolyMatrix::column_degree(std::size_t j) const {
  int d = -1;
  for (std::size_t i = 0; i < rows_; ++i) d = std::max(d, (*this)(i, j).degree());
  return d;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Poly& p) { return p.is_zero(); });
}

Matrix PolyMatrix::eval(const Scalar& at) const {
  Matrix m(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).eval(at);
  return m;
}

Matrix PolyMatrix::coefficient(std::size_t k) const {
  Matrix m(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).coeff(k);
  return m;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

PolyMatrix PolyMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw ShapeError("polynomial block out of range");
  PolyMatrix b(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

std::vector<Poly> PolyMatrix::column(std::size_t j) const {
  std::vector<Poly> c;
  for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
  return c;
}

void PolyMatrix::swap_columns(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void PolyMatrix::add_column_multiple(std::size_t dst, std::size_t src, const Poly& f) {
  for (std::size_t i = 0; i < rows_; ++i) {
    if ((*this)(i, src).is_zero()) continue;
    (*this)(i, dst) += f * (*this)(i, src);
  }
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("polynomial matrix sum shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw ShapeError("polynomial matrix product shape mismatch");
  PolyMatrix c(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string PolyMatrix::to_string(char var) const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string(var);
    os << "]";
  }
  os << "]";
  return os.str();
}

PolyMatrix hstack(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows()) throw ShapeError("polynomial hstack row mismatch");
  PolyMatrix m(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
  }
  return m;
}

}  // namespace modspace::exact
