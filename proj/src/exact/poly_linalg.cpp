#include "modspace/exact/poly_linalg.hpp"

#include <algorithm>

#include "modspace/error.hpp"
#include "modspace/exact/linalg.hpp"

namespace modspace::exact {

ColumnEchelon column_echelon(const PolyMatrix& p) {
  const Field f = p.field();
  ColumnEchelon out{p, PolyMatrix::identity(f, p.cols()), {}, 1};
  PolyMatrix& red = out.reduced;
  PolyMatrix& u = out.transform;
  const std::size_t c = p.cols();
  for (std::size_t i = 0; i < p.rows() && out.rank() < c; ++i) {
    const std::size_t start = out.rank();
    for (;;) {
      std::size_t pivot = c;
      for (std::size_t j = start; j < c; ++j) {
        if (red(i, j).is_zero()) continue;
        if (pivot == c || red(i, j).degree() < red(i, pivot).degree()) pivot = j;
      }
      if (pivot == c) break;
      bool others = false;
      for (std::size_t j = start; j < c; ++j) {
        if (j == pivot || red(i, j).is_zero()) continue;
        const Poly q = divmod(red(i, j), red(i, pivot)).first;
        red.add_column_multiple(j, pivot, -q);
        u.add_column_multiple(j, pivot, -q);
        if (!red(i, j).is_zero()) others = true;
      }
      if (!others) {
        if (pivot != start) {
          red.swap_columns(pivot, start);
          u.swap_columns(pivot, start);
          out.transform_det_sign = -out.transform_det_sign;
        }
        out.pivot_rows.push_back(i);
        break;
      }
    }
  }
  return out;
}

PolyMatrix column_reduce(PolyMatrix basis) {
  const Field f = basis.field();
  const std::size_t m = basis.cols();
  for (;;) {
    std::vector<int> deg(m);
    for (std::size_t j = 0; j < m; ++j) {
      deg[j] = basis.column_degree(j);
      if (deg[j] < 0) throw DomainError("column_reduce: zero column");
    }
    Matrix lead(f, basis.rows(), m);
    for (std::size_t i = 0; i < basis.rows(); ++i)
      for (std::size_t j = 0; j < m; ++j)
        lead(i, j) = basis(i, j).coeff(static_cast<std::size_t>(deg[j]));
    auto rk = rank_and_kernel(lead);
    if (rk.kernel_basis.empty()) return basis;
    const Vector& c = rk.kernel_basis.front();
    std::size_t top = m;
    for (std::size_t j = 0; j < m; ++j)
      if (!c[j].is_zero() && (top == m || deg[j] > deg[top])) top = j;
    // column[top] <- sum_j c_j x^(deg top - deg j) column[j] / c_top; degree drops
    const Scalar inv = c[top].inverse();
    for (std::size_t j = 0; j < m; ++j) {
      if (j == top || c[j].is_zero()) continue;
      const auto shift = static_cast<std::size_t>(deg[top] - deg[j]);
      basis.add_column_multiple(top, j, Poly::monomial(c[j] * inv, shift));
    }
    if (basis.column_degree(top) >= deg[top]) throw InternalError("column_reduce made no progress");
  }
}

std::size_t truncated_nullity(const PolyMatrix& p, std::size_t degree) {
  const std::size_t dp = static_cast<std::size_t>(std::max(p.degree(), 0));
  const std::size_t width = degree + 1;
  const std::size_t height = degree + dp + 1;
  Matrix lin(p.field(), p.rows() * height, p.cols() * width);
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j) {
      const Poly& e = p(i, j);
      for (std::size_t k = 0; k < e.coeffs().size(); ++k)
        for (std::size_t s = 0; s < width; ++s) lin(i * height + k + s, j * width + s) = e.coeffs()[k];
    }
  return p.cols() * width - rank(lin);
}

bool kernel_stable(const PolyMatrix& p, const PolyMatrix& k, std::size_t degree) {
  if (!(p * k).is_zero()) return false;
  const std::size_t width = degree + 1;
  Span span(p.field(), p.cols() * width);
  for (std::size_t j = 0; j < k.cols(); ++j) {
    const int dj = k.column_degree(j);
    if (dj < 0 || static_cast<std::size_t>(dj) > degree) continue;
    for (std::size_t e = 0; e + static_cast<std::size_t>(dj) <= degree; ++e) {
      Vector v = zero_vector(p.field(), p.cols() * width);
      for (std::size_t i = 0; i < k.rows(); ++i) {
        const Poly& entry = k(i, j);
        for (std::size_t s = 0; s < entry.coeffs().size(); ++s) v[i * width + s + e] = entry.coeffs()[s];
      }
      span.add(v);
    }
  }
  return span.dim() == truncated_nullity(p, degree);
}

PolyMatrix hermite_kernel(const PolyMatrix& p, std::optional<std::size_t> degree_bound) {
  const ColumnEchelon ech = column_echelon(p);
  const std::size_t nullity = p.cols() - ech.rank();
  PolyMatrix kernel = ech.transform.block(0, ech.rank(), p.cols(), nullity);
  if (nullity > 0) kernel = column_reduce(std::move(kernel));
  if (!(p * kernel).is_zero()) throw InternalError("hermite_kernel: column fails P*k = 0");
  const std::size_t base =
      degree_bound.value_or(static_cast<std::size_t>(std::max(p.degree(), 0)) + 1);
  if (!kernel_stable(p, kernel, base) || !kernel_stable(p, kernel, base + 2)) {
    throw InternalError("hermite_kernel: degree-stabilization certificate failed");
  }
  return kernel;
}

std::optional<PolyMatrix> solve_columns(const PolyMatrix& b, const PolyMatrix& v) {
  if (b.rows() != v.rows()) throw ShapeError("solve_columns row mismatch");
  const Field f = b.field();
  const std::size_t s = b.cols();
  // B^T U = [L | 0] with L lower triangular s x s, so U^T B = [L^T ; 0].
  const ColumnEchelon ech = column_echelon(b.transpose());
  if (ech.rank() != s) throw DomainError("solve_columns: B lacks full column rank");
  for (std::size_t k = 0; k < s; ++k)
    if (ech.pivot_rows[k] != k) throw InternalError("solve_columns: unexpected pivot layout");
  const PolyMatrix upper = ech.reduced.block(0, 0, s, s).transpose();
  const PolyMatrix w = ech.transform.transpose() * v;
  for (std::size_t i = s; i < w.rows(); ++i)
    for (std::size_t j = 0; j < w.cols(); ++j)
      if (!w(i, j).is_zero()) return std::nullopt;
  PolyMatrix c(f, s, v.cols());
  for (std::size_t col = 0; col < v.cols(); ++col) {
    for (std::size_t i = s; i-- > 0;) {
      Poly acc = w(i, col);
      for (std::size_t j = i + 1; j < s; ++j) acc -= upper(i, j) * c(j, col);
      auto [q, r] = divmod(acc, upper(i, i));
      if (!r.is_zero()) return std::nullopt;
      c(i, col) = std::move(q);
    }
  }
  if (!(b * c == v)) throw InternalError("solve_columns produced a non-solution");
  return c;
}

Poly determinant(const PolyMatrix& p) {
  if (p.rows() != p.cols()) throw ShapeError("determinant of non-square polynomial matrix");
  const ColumnEchelon ech = column_echelon(p);
  if (ech.rank() < p.cols()) return Poly(p.field());
  // det U = +-1: only additions of column multiples and swaps were applied
  Poly det(Scalar(p.field(), ech.transform_det_sign));
  for (std::size_t k = 0; k < p.cols(); ++k) det *= ech.reduced(k, k);
  return det;
}

std::size_t colength(const PolyMatrix& b) {
  const Poly det = determinant(b);
  if (det.is_zero()) throw DomainError("colength of a singular polynomial matrix");
  return static_cast<std::size_t>(det.degree());
}

}  // namespace modspace::exact
