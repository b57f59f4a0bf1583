#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "modspace/exact/poly_matrix.hpp"

namespace modspace::exact {

/// Result of unimodular column reduction P * U = reduced over k[x].
/// Columns [0, rank) of `reduced` form a lower echelon block with pivots in
/// `pivot_rows`; columns [rank, cols) are zero.
struct ColumnEchelon {
  PolyMatrix reduced;
  PolyMatrix transform;
  std::vector<std::size_t> pivot_rows;
  int transform_det_sign = 1;  // det U = +-1
  std::size_t rank() const noexcept { return pivot_rows.size(); }
};

/// Euclidean column reduction: pivots are chosen by minimal degree.
ColumnEchelon column_echelon(const PolyMatrix& p);

/// Rewrites a full-column-rank polynomial matrix into a column-reduced basis of the same
/// k[x]-column span (leading coefficient matrix of full column rank).
PolyMatrix column_reduce(PolyMatrix basis);

/// Basis of ker(P) over k[x] as the columns of the result (column-reduced).
/// Every column is checked by substitution and generation is certified by
/// kernel_stable at degrees D and D+2, where D defaults to deg(P) + 1.
PolyMatrix hermite_kernel(const PolyMatrix& p, std::optional<std::size_t> degree_bound = {});

/// True if P*K = 0 and, in degrees <= D, the k-span of {x^e k_j} equals the
/// truncated k-linear kernel of P. K must be column reduced.
bool kernel_stable(const PolyMatrix& p, const PolyMatrix& k, std::size_t degree);

/// Dimension of {v in (k[x]_{<=D})^cols : P v = 0}, by plain linear algebra.
std::size_t truncated_nullity(const PolyMatrix& p, std::size_t degree);

/// C with B*C = V over k[x], for B of full column rank; nullopt if some column of V
/// is outside the column span of B.
std::optional<PolyMatrix> solve_columns(const PolyMatrix& b, const PolyMatrix& v);

Poly determinant(const PolyMatrix& p);

/// dim_k k[x]^r / span(columns of B) for a square nonsingular B.
std::size_t colength(const PolyMatrix& b);

}  // namespace modspace::exact
