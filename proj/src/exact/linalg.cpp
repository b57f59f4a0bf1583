#include "modspace/exact/linalg.hpp"

#include "modspace/error.hpp"

namespace modspace::exact {

RowEchelon rref(const Matrix& m) {
  m.require_uniform_field();
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && a(sel, col).is_zero()) ++sel;
    if (sel == a.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(sel, j), a(row, j));
    const Scalar inv = a(row, col).inverse();
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col).is_zero()) continue;
      const Scalar factor = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j)
        if (!a(row, j).is_zero()) a(i, j) -= factor * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return RowEchelon{std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

RankKernel rank_and_kernel(const Matrix& m) {
  RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  RankKernel out;
  out.rank = e.rank();
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(m.field(), m.cols());
    v[free] = Scalar(m.field(), 1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    out.kernel_basis.push_back(std::move(v));
  }
  for (const auto& v : out.kernel_basis) {
    if (!is_zero_vector(m * v)) throw InternalError("kernel vector fails M v = 0");
  }
  if (out.rank + out.kernel_basis.size() != m.cols()) throw InternalError("rank-nullity violated");
  return out;
}

Matrix kernel_matrix(const Matrix& m) {
  auto rk = rank_and_kernel(m);
  return Matrix::from_columns(m.field(), m.cols(), rk.kernel_basis);
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw ShapeError("solve: A and B row counts differ");
  if (!(a.field() == b.field())) throw FieldMismatch("solve over different fields");
  const Matrix aug = hstack(a, b);
  RowEchelon e = rref(aug);
  for (auto p : e.pivots)
    if (p >= a.cols()) return std::nullopt;  // certified: rank [A|B] > rank A
  Matrix x(a.field(), a.cols(), b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[r], j) = e.reduced(r, a.cols() + j);
  if (!(a * x == b)) throw InternalError("solve produced a non-solution");
  return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (!a.is_square()) throw ShapeError("inverse of non-square matrix");
  auto x = solve(a, Matrix::identity(a.field(), a.rows()));
  if (!x) return std::nullopt;
  if (rank(a) != a.rows()) return std::nullopt;
  return x;
}

Scalar determinant(const Matrix& m) {
  if (!m.is_square()) throw ShapeError("determinant of non-square matrix");
  m.require_uniform_field();
  Matrix a = m;
  const std::size_t n = a.rows();
  Scalar det(a.field(), 1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && a(sel, col).is_zero()) ++sel;
    if (sel == n) return Scalar(a.field());
    if (sel != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(sel, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    const Scalar inv = a(col, col).inverse();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a(i, col).is_zero()) continue;
      const Scalar f = a(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return det;
}

Span::Span(Field f, std::size_t ambient) : field_(f), n_(ambient) {}

Vector Span::reduce(Vector v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t p = pivots_[r];
    if (v[p].is_zero()) continue;
    const Scalar f = v[p];
    for (std::size_t j = p; j < n_; ++j)
      if (!rows_[r][j].is_zero()) v[j] -= f * rows_[r][j];
  }
  return v;
}

bool Span::add(const Vector& v) {
  if (v.size() != n_) throw ShapeError("span vector has wrong length");
  Vector red = reduce(v);
  std::size_t p = 0;
  while (p < n_ && red[p].is_zero()) ++p;
  if (p == n_) return false;
  const Scalar inv = red[p].inverse();
  for (std::size_t j = p; j < n_; ++j) red[j] *= inv;
  // keep rows sorted by pivot so reduce() is a single forward pass
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
  // clear column p in the other rows
  for (auto& row : rows_) {
    if (row[p].is_zero()) continue;
    const Scalar f = row[p];
    for (std::size_t j = p; j < n_; ++j)
      if (!red[j].is_zero()) row[j] -= f * red[j];
  }
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(red));
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
  inserted_.push_back(v);
  return true;
}

bool Span::contains(const Vector& v) const {
  if (v.size() != n_) throw ShapeError("span vector has wrong length");
  return is_zero_vector(reduce(v));
}

Matrix Span::basis_matrix() const { return Matrix::from_columns(field_, n_, inserted_); }

std::size_t LinearSystem::add_block(std::size_t rows, std::size_t cols) {
  const std::size_t off = unknowns_;
  unknowns_ += rows * cols;
  return off;
}

std::size_t LinearSystem::add_equations(std::size_t count) {
  const std::size_t first = equations_.size();
  equations_.resize(first + count);
  return first;
}

void LinearSystem::add_sandwich(std::size_t first, const Matrix& left, std::size_t offset,
                                const Matrix& right, const Scalar& sign) {
  // vec(L U R)[p, q] = sum_{s,t} L[p,s] U[s,t] R[t,q]
  const std::size_t ucols = right.rows();
  if (first + left.rows() * right.cols() > equations_.size())
    throw ShapeError("sandwich equations out of range");
  for (std::size_t p = 0; p < left.rows(); ++p)
    for (std::size_t s = 0; s < left.cols(); ++s) {
      if (left(p, s).is_zero()) continue;
      const Scalar ls = left(p, s) * sign;
      for (std::size_t t = 0; t < right.rows(); ++t)
        for (std::size_t q = 0; q < right.cols(); ++q) {
          if (right(t, q).is_zero()) continue;
          equations_[first + p * right.cols() + q].emplace_back(offset + s * ucols + t,
                                                                ls * right(t, q));
        }
    }
}

Matrix LinearSystem::matrix() const {
  Matrix m(field_, equations_.size(), unknowns_);
  for (std::size_t e = 0; e < equations_.size(); ++e)
    for (const auto& [col, coeff] : equations_[e]) m(e, col) += coeff;
  return m;
}

}  // namespace modspace::exact
