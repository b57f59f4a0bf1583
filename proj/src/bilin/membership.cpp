#include "modspace/bilin/bilin.hpp"
#include "modspace/error.hpp"
#include "modspace/exact/linalg.hpp"

namespace modspace::bilin {

namespace {

struct MembershipSystem {
  Matrix lhs;  // coefficients on vec(Pihat)
  Matrix rhs;  // single column
};

// Pihat (X_i (x) 1) = Z_i Pihat, Pihat (1 (x) Y_i) = Z_i Pihat, Pihat (G (x) H) = F3.
MembershipSystem membership_system(const FramedModule& m1, const FramedModule& m2, const FramedModule& m3) {
  if (m1.n != m2.n || m1.n != m3.n) throw ShapeError("factor_membership: variable counts differ");
  if (m3.r != m1.r * m2.r) throw ShapeError("factor_membership: target framing must have r1 r2 columns");
  modcore::check_shapes(m1);
  modcore::check_shapes(m2);
  modcore::check_shapes(m3);
  const Field f = m1.field();
  if (!(m2.field() == f) || !(m3.field() == f)) throw FieldMismatch("factor_membership: fields differ");
  const std::size_t d3 = m3.d, N = m1.d * m2.d;
  const Matrix i1 = Matrix::identity(f, m1.d), i2 = Matrix::identity(f, m2.d), i3 = Matrix::identity(f, d3);
  const Scalar one(f, 1), minus_one(f, -1);

  exact::LinearSystem sys(f);
  std::size_t pi = sys.add_block(d3, N);
  for (std::size_t i = 0; i < m1.n; ++i) {
    std::size_t eq = sys.add_equations(d3 * N);
    sys.add_sandwich(eq, i3, pi, exact::kron(m1.X[i], i2), one);
    sys.add_sandwich(eq, m3.X[i], pi, Matrix::identity(f, N), minus_one);
    eq = sys.add_equations(d3 * N);
    sys.add_sandwich(eq, i3, pi, exact::kron(i1, m2.X[i]), one);
    sys.add_sandwich(eq, m3.X[i], pi, Matrix::identity(f, N), minus_one);
  }
  const std::size_t homogeneous = sys.matrix().rows();
  std::size_t eq = sys.add_equations(d3 * m3.r);
  sys.add_sandwich(eq, i3, pi, exact::kron(m1.G, m2.G), one);
  MembershipSystem out{sys.matrix(), Matrix(f, homogeneous + d3 * m3.r, 1)};
  Vector target = exact::vec(m3.G);
  for (std::size_t k = 0; k < target.size(); ++k) out.rhs(homogeneous + k, 0) = target[k];
  return out;
}

}  // namespace

std::optional<std::size_t> membership_solution_dim(const FramedModule& m1, const FramedModule& m2,
                                                   const FramedModule& m3) {
  auto sys = membership_system(m1, m2, m3);
  if (!exact::solve(sys.lhs, sys.rhs)) return std::nullopt;
  return sys.lhs.cols() - exact::rank(sys.lhs);
}

std::optional<BilinPoint> factor_membership(const FramedModule& m1, const FramedModule& m2,
                                            const FramedModule& m3) {
  modcore::require_valid(m1, "factor_membership M1");
  modcore::require_valid(m2, "factor_membership M2");
  modcore::require_valid(m3, "factor_membership M3");
  auto sys = membership_system(m1, m2, m3);
  auto sol = exact::solve(sys.lhs, sys.rhs);
  if (!sol) return std::nullopt;
  if (exact::rank(sys.lhs) != sys.lhs.cols())
    throw InternalError("factor_membership: lift is not unique although the modules generate");
  BilinPoint out{m1, m2, m3.d, m3.X, exact::unvec(sol->column(0), m3.d, m1.d * m2.d)};
  auto v = validate_bilin(out);
  if (!v.valid()) throw InternalError("factor_membership: solution fails validation: " + v.message());
  if (!(induced_framing(out) == m3.G)) throw InternalError("factor_membership: framing not reproduced");
  return out;
}

}  // namespace modspace::bilin
