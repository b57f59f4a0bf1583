#include "modspace/bilin/bilin.hpp"
#include "modspace/error.hpp"
#include "modspace/exact/linalg.hpp"

namespace modspace::bilin {

using exact::LinearSystem;

namespace {

struct Layout {
  std::vector<std::size_t> xdot, ydot, zdot;
  std::size_t gdot = 0, hdot = 0, pdot = 0;
};

Layout register_blocks(LinearSystem& sys, const BilinPoint& b) {
  Layout l;
  const std::size_t n = b.n(), d1 = b.M1.d, d2 = b.M2.d, d3 = b.d3;
  for (std::size_t i = 0; i < n; ++i) l.xdot.push_back(sys.add_block(d1, d1));
  l.gdot = sys.add_block(d1, b.M1.r);
  for (std::size_t i = 0; i < n; ++i) l.ydot.push_back(sys.add_block(d2, d2));
  l.hdot = sys.add_block(d2, b.M2.r);
  for (std::size_t i = 0; i < n; ++i) l.zdot.push_back(sys.add_block(d3, d3));
  l.pdot = sys.add_block(d3, d1 * d2);
  return l;
}

void add_commutation(LinearSystem& sys, const std::vector<Matrix>& X, const std::vector<std::size_t>& blocks) {
  if (X.empty()) return;
  const Field f = X.front().field();
  const Matrix id = Matrix::identity(f, X.front().rows());
  const Scalar one(f, 1), minus_one(f, -1);
  for (std::size_t i = 0; i < X.size(); ++i)
    for (std::size_t j = i + 1; j < X.size(); ++j) {
      std::size_t eq = sys.add_equations(id.rows() * id.rows());
      sys.add_sandwich(eq, id, blocks[i], X[j], one);
      sys.add_sandwich(eq, X[i], blocks[j], id, one);
      sys.add_sandwich(eq, id, blocks[j], X[i], minus_one);
      sys.add_sandwich(eq, X[j], blocks[i], id, minus_one);
    }
}

// Pihat (U (x) 1) = sum_b P_b U S_b with P_b[s, a] = Pihat[s, a d2 + b] and S_b[a, a d2 + b] = 1.
void add_left_factor(LinearSystem& sys, std::size_t eq, const Matrix& pihat, std::size_t d1, std::size_t d2,
                     std::size_t block, const Scalar& sign) {
  const Field f = pihat.field();
  for (std::size_t b = 0; b < d2; ++b) {
    Matrix p(f, pihat.rows(), d1), s(f, d1, d1 * d2);
    for (std::size_t a = 0; a < d1; ++a) {
      for (std::size_t r = 0; r < pihat.rows(); ++r) p(r, a) = pihat(r, a * d2 + b);
      s(a, a * d2 + b) = Scalar(f, 1);
    }
    sys.add_sandwich(eq, p, block, s, sign);
  }
}

// Pihat (1 (x) U) = sum_a Q_a U T_a with Q_a[s, b] = Pihat[s, a d2 + b] and T_a[b, a d2 + b] = 1.
void add_right_factor(LinearSystem& sys, std::size_t eq, const Matrix& pihat, std::size_t d1, std::size_t d2,
                      std::size_t block, const Scalar& sign) {
  const Field f = pihat.field();
  for (std::size_t a = 0; a < d1; ++a) {
    Matrix q(f, pihat.rows(), d2), t(f, d2, d1 * d2);
    for (std::size_t b = 0; b < d2; ++b) {
      for (std::size_t r = 0; r < pihat.rows(); ++r) q(r, b) = pihat(r, a * d2 + b);
      t(b, a * d2 + b) = Scalar(f, 1);
    }
    sys.add_sandwich(eq, q, block, t, sign);
  }
}

}  // namespace

Vector flatten(const BilinTangentVector& v) {
  Vector out;
  auto append = [&](const Matrix& m) {
    Vector part = exact::vec(m);
    out.insert(out.end(), part.begin(), part.end());
  };
  for (const auto& m : v.Xdot) append(m);
  append(v.Gdot);
  for (const auto& m : v.Ydot) append(m);
  append(v.Hdot);
  for (const auto& m : v.Zdot) append(m);
  append(v.Pihatdot);
  return out;
}

BilinTangentVector unflatten(const BilinPoint& b, const Vector& v) {
  BilinTangentVector out;
  std::size_t off = 0;
  auto take = [&](std::size_t r, std::size_t c) {
    Matrix m = exact::unvec(v, r, c, off);
    off += r * c;
    return m;
  };
  const std::size_t d1 = b.M1.d, d2 = b.M2.d, d3 = b.d3;
  for (std::size_t i = 0; i < b.n(); ++i) out.Xdot.push_back(take(d1, d1));
  out.Gdot = take(d1, b.M1.r);
  for (std::size_t i = 0; i < b.n(); ++i) out.Ydot.push_back(take(d2, d2));
  out.Hdot = take(d2, b.M2.r);
  for (std::size_t i = 0; i < b.n(); ++i) out.Zdot.push_back(take(d3, d3));
  out.Pihatdot = take(d3, d1 * d2);
  return out;
}

BilinTangentVector gauge_vector(const BilinPoint& b, const Matrix& d1, const Matrix& d2, const Matrix& d3) {
  BilinTangentVector v;
  for (const auto& x : b.M1.X) v.Xdot.push_back(exact::commutator(d1, x));
  v.Gdot = d1 * b.M1.G;
  for (const auto& y : b.M2.X) v.Ydot.push_back(exact::commutator(d2, y));
  v.Hdot = d2 * b.M2.G;
  for (const auto& z : b.Z) v.Zdot.push_back(exact::commutator(d3, z));
  const Field f = b.field();
  v.Pihatdot = d3 * b.Pihat -
               b.Pihat * (exact::kron(d1, Matrix::identity(f, b.M2.d)) + exact::kron(Matrix::identity(f, b.M1.d), d2));
  return v;
}

bool satisfies_first_order(const BilinPoint& b, const BilinTangentVector& v) {
  auto commute = [](const std::vector<Matrix>& X, const std::vector<Matrix>& Xd) {
    for (std::size_t i = 0; i < X.size(); ++i)
      for (std::size_t j = i + 1; j < X.size(); ++j)
        if (!(Xd[i] * X[j] + X[i] * Xd[j] == Xd[j] * X[i] + X[j] * Xd[i])) return false;
    return true;
  };
  if (!commute(b.M1.X, v.Xdot) || !commute(b.M2.X, v.Ydot) || !commute(b.Z, v.Zdot)) return false;
  const Field f = b.field();
  const Matrix i1 = Matrix::identity(f, b.M1.d), i2 = Matrix::identity(f, b.M2.d);
  for (std::size_t i = 0; i < b.n(); ++i) {
    Matrix l = v.Pihatdot * exact::kron(b.M1.X[i], i2) + b.Pihat * exact::kron(v.Xdot[i], i2);
    Matrix r = v.Zdot[i] * b.Pihat + b.Z[i] * v.Pihatdot;
    if (!(l == r)) return false;
    l = v.Pihatdot * exact::kron(i1, b.M2.X[i]) + b.Pihat * exact::kron(i1, v.Ydot[i]);
    if (!(l == r)) return false;
  }
  return true;
}

BilinTangent bilin_tangent(const BilinPoint& b, bool check) {
  require_valid(b, "bilin_tangent");
  const Field f = b.field();
  const std::size_t d1 = b.M1.d, d2 = b.M2.d, d3 = b.d3, N = d1 * d2;
  const Scalar one(f, 1), minus_one(f, -1);
  const Matrix i1 = Matrix::identity(f, d1), i2 = Matrix::identity(f, d2), i3 = Matrix::identity(f, d3);
  const Matrix iN = Matrix::identity(f, N);

  LinearSystem sys(f);
  Layout l = register_blocks(sys, b);
  add_commutation(sys, b.M1.X, l.xdot);
  add_commutation(sys, b.M2.X, l.ydot);
  add_commutation(sys, b.Z, l.zdot);
  for (std::size_t i = 0; i < b.n(); ++i) {
    // Pdot (X_i (x) 1) + Pihat (Xdot_i (x) 1) - Zdot_i Pihat - Z_i Pdot = 0
    std::size_t eq = sys.add_equations(d3 * N);
    sys.add_sandwich(eq, i3, l.pdot, exact::kron(b.M1.X[i], i2), one);
    add_left_factor(sys, eq, b.Pihat, d1, d2, l.xdot[i], one);
    sys.add_sandwich(eq, i3, l.zdot[i], b.Pihat, minus_one);
    sys.add_sandwich(eq, b.Z[i], l.pdot, iN, minus_one);
    // same with 1 (x) Y_i
    eq = sys.add_equations(d3 * N);
    sys.add_sandwich(eq, i3, l.pdot, exact::kron(i1, b.M2.X[i]), one);
    add_right_factor(sys, eq, b.Pihat, d1, d2, l.ydot[i], one);
    sys.add_sandwich(eq, i3, l.zdot[i], b.Pihat, minus_one);
    sys.add_sandwich(eq, b.Z[i], l.pdot, iN, minus_one);
  }
  auto rk = exact::rank_and_kernel(sys.matrix());

  BilinTangent out;
  out.nullity = rk.kernel_basis.size();
  out.gauge = d1 * d1 + d2 * d2 + d3 * d3;
  if (out.nullity < out.gauge) throw InternalError("bilin_tangent: nullity below gauge dimension");
  out.dim = out.nullity - out.gauge;

  exact::Span span(f, sys.unknowns());
  auto elementary = [&](std::size_t d, std::size_t a, std::size_t c) {
    Matrix m(f, d, d);
    m(a, c) = one;
    return m;
  };
  const Matrix z1(f, d1, d1), z2(f, d2, d2), z3(f, d3, d3);
  for (std::size_t a = 0; a < d1; ++a)
    for (std::size_t c = 0; c < d1; ++c) span.add(flatten(gauge_vector(b, elementary(d1, a, c), z2, z3)));
  for (std::size_t a = 0; a < d2; ++a)
    for (std::size_t c = 0; c < d2; ++c) span.add(flatten(gauge_vector(b, z1, elementary(d2, a, c), z3)));
  for (std::size_t a = 0; a < d3; ++a)
    for (std::size_t c = 0; c < d3; ++c) span.add(flatten(gauge_vector(b, z1, z2, elementary(d3, a, c))));
  if (check && span.dim() != out.gauge) throw InternalError("bilin_tangent: gauge map is not injective");
  for (const auto& v : rk.kernel_basis)
    if (span.add(v)) out.basis.push_back(unflatten(b, v));
  if (span.dim() != out.nullity || out.basis.size() != out.dim)
    throw InternalError("bilin_tangent: gauge subspace not contained in the solution space");
  return out;
}

}  // namespace modspace::bilin
