#include "modspace/error.hpp"
#include "modspace/exact/linalg.hpp"
#include "modspace/quot/quot.hpp"

namespace modspace::quot {

using exact::LinearSystem;
using exact::Span;

Vector flatten(const QuotTangentVector& v) {
  Vector out;
  for (const auto& x : v.Xdot) {
    Vector part = exact::vec(x);
    out.insert(out.end(), part.begin(), part.end());
  }
  Vector g = exact::vec(v.Gdot);
  out.insert(out.end(), g.begin(), g.end());
  return out;
}

QuotTangentVector unflatten(const FramedModule& p, const Vector& v) {
  QuotTangentVector out;
  std::size_t offset = 0;
  for (std::size_t i = 0; i < p.n; ++i, offset += p.d * p.d) out.Xdot.push_back(exact::unvec(v, p.d, p.d, offset));
  out.Gdot = exact::unvec(v, p.d, p.r, offset);
  return out;
}

QuotTangentVector gauge_vector(const FramedModule& p, const Matrix& delta) {
  QuotTangentVector v;
  for (const auto& x : p.X) v.Xdot.push_back(exact::commutator(delta, x));
  v.Gdot = delta * p.G;
  return v;
}

bool satisfies_first_order(const FramedModule& p, const QuotTangentVector& v) {
  if (v.Xdot.size() != p.n) throw ShapeError("tangent vector has the wrong number of matrices");
  for (std::size_t i = 0; i < p.n; ++i)
    for (std::size_t j = i + 1; j < p.n; ++j) {
      Matrix lhs = v.Xdot[i] * p.X[j] + p.X[i] * v.Xdot[j];
      Matrix rhs = v.Xdot[j] * p.X[i] + p.X[j] * v.Xdot[i];
      if (!(lhs == rhs)) return false;
    }
  return true;
}

QuotTangent quot_tangent(const FramedModule& p, bool check) {
  modcore::require_valid(p, "quot_tangent");
  const Field f = p.field();
  const std::size_t d = p.d;
  const Matrix id = Matrix::identity(f, d);
  const Scalar one(f, 1), minus_one(f, -1);

  LinearSystem sys(f);
  std::vector<std::size_t> xdot;
  for (std::size_t i = 0; i < p.n; ++i) xdot.push_back(sys.add_block(d, d));
  sys.add_block(d, p.r);
  for (std::size_t i = 0; i < p.n; ++i)
    for (std::size_t j = i + 1; j < p.n; ++j) {
      std::size_t eq = sys.add_equations(d * d);
      sys.add_sandwich(eq, id, xdot[i], p.X[j], one);
      sys.add_sandwich(eq, p.X[i], xdot[j], id, one);
      sys.add_sandwich(eq, id, xdot[j], p.X[i], minus_one);
      sys.add_sandwich(eq, p.X[j], xdot[i], id, minus_one);
    }
  auto rk = exact::rank_and_kernel(sys.matrix());

  QuotTangent out;
  out.nullity = rk.kernel_basis.size();
  out.gauge = d * d;
  if (out.nullity < out.gauge) throw InternalError("quot_tangent: nullity below gauge dimension");
  out.dim = out.nullity - out.gauge;

  Span span(f, sys.unknowns());
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      Matrix delta(f, d, d);
      delta(a, b) = one;
      span.add(flatten(gauge_vector(p, delta)));
    }
  if (check && span.dim() != out.gauge) throw InternalError("quot_tangent: gauge map is not injective");
  for (const auto& v : rk.kernel_basis)
    if (span.add(v)) out.basis.push_back(unflatten(p, v));
  if (span.dim() != out.nullity || out.basis.size() != out.dim)
    throw InternalError("quot_tangent: gauge subspace not contained in the solution space");
  return out;
}

}  // namespace modspace::quot
