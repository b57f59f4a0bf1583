#include "modspace/error.hpp"
#include "modspace/exact/linalg.hpp"
#include "modspace/exact/poly_linalg.hpp"
#include "modspace/quot/quot.hpp"

namespace modspace::quot {

using exact::Poly;

namespace {

void require_univariate(const FramedModule& p, const char* what) {
  if (p.n != 1) throw DomainError(std::string(what) + ": requires n = 1");
  modcore::require_valid(p, what);
}

// Syzygies among the generators of K, as columns.
PolyMatrix syzygies(const KernelPresentation& k) {
  if (k.generators.cols() == 0) return PolyMatrix(k.generators.field(), 0, 0);
  return exact::hermite_kernel(k.generators);
}

}  // namespace

Vector evaluate_in_module(const FramedModule& p, const std::vector<Poly>& f) {
  if (p.n != 1) throw DomainError("evaluate_in_module: requires n = 1");
  if (f.size() != p.r) throw ShapeError("evaluate_in_module: expected r polynomials");
  Vector out = exact::zero_vector(p.field(), p.d);
  for (std::size_t a = 0; a < p.r; ++a) {
    Vector v = f[a].eval(p.X[0]) * p.G.column(a);
    for (std::size_t i = 0; i < p.d; ++i) out[i] += v[i];
  }
  return out;
}

KernelPresentation kernel_presentation(const FramedModule& p) {
  require_univariate(p, "kernel_presentation");
  const Field f = p.field();
  // (u, h) in ker [G | -(xI - X)]  <=>  G u = (xI - X) h  <=>  u maps to 0 in M;
  // xI - X is injective, so projecting to u loses nothing
  PolyMatrix pres = exact::hstack(PolyMatrix::constant(p.G), PolyMatrix(f, p.d, p.d));
  PolyMatrix ch = PolyMatrix::characteristic(p.X[0]);
  for (std::size_t i = 0; i < p.d; ++i)
    for (std::size_t j = 0; j < p.d; ++j) pres(i, p.r + j) = -ch(i, j);
  PolyMatrix full = exact::hermite_kernel(pres, p.d + 1);
  KernelPresentation k{full.block(0, 0, p.r, full.cols())};
  for (std::size_t j = 0; j < k.generators.cols(); ++j)
    if (!exact::is_zero_vector(evaluate_in_module(p, k.generators.column(j))))
      throw InternalError("kernel_presentation: generator does not vanish in M");
  if (k.generators.cols() != p.r || exact::colength(k.generators) != p.d)
    throw InternalError("kernel_presentation: kernel does not have colength d");
  return k;
}

bool is_hom_on_generators(const FramedModule& p, const KernelPresentation& k, const Matrix& images) {
  if (images.rows() != p.d || images.cols() != k.generators.cols())
    throw ShapeError("is_hom_on_generators: images must be d x (number of generators)");
  PolyMatrix syz = syzygies(k);
  for (std::size_t s = 0; s < syz.cols(); ++s) {
    Vector acc = exact::zero_vector(p.field(), p.d);
    for (std::size_t j = 0; j < syz.rows(); ++j) {
      Vector v = syz(j, s).eval(p.X[0]) * images.column(j);
      for (std::size_t i = 0; i < p.d; ++i) acc[i] += v[i];
    }
    if (!exact::is_zero_vector(acc)) return false;
  }
  return true;
}

HomKM hom_KM_univariate(const FramedModule& p) {
  require_univariate(p, "hom_KM_univariate");
  HomKM out;
  out.kernel = kernel_presentation(p);
  const Field f = p.field();
  const std::size_t m = out.kernel.generators.cols();
  PolyMatrix syz = syzygies(out.kernel);

  exact::LinearSystem sys(f);
  std::size_t phi = sys.add_block(p.d, m);
  for (std::size_t s = 0; s < syz.cols(); ++s) {
    std::size_t eq = sys.add_equations(p.d);
    for (std::size_t j = 0; j < m; ++j) {
      Matrix ej(f, m, 1);
      ej(j, 0) = Scalar(f, 1);
      sys.add_sandwich(eq, syz(j, s).eval(p.X[0]), phi, ej, Scalar(f, 1));
    }
  }
  auto rk = exact::rank_and_kernel(sys.matrix());
  out.dim = rk.kernel_basis.size();
  for (const auto& v : rk.kernel_basis) out.basis.push_back(exact::unvec(v, p.d, m));
  return out;
}

Matrix tangent_to_hom(const FramedModule& p, const KernelPresentation& k, const QuotTangentVector& v) {
  if (p.n != 1) throw DomainError("tangent_to_hom: requires n = 1");
  const Field f = p.field();
  const std::size_t d = p.d;
  // f([[X, Xdot], [0, X]]) = [[f(X), Df(X)[Xdot]], [0, f(X)]]
  Matrix dual(f, 2 * d, 2 * d);
  dual.set_block(0, 0, p.X[0]);
  dual.set_block(0, d, v.Xdot[0]);
  dual.set_block(d, d, p.X[0]);
  Matrix out(f, d, k.generators.cols());
  for (std::size_t j = 0; j < k.generators.cols(); ++j) {
    Vector acc = exact::zero_vector(f, d);
    for (std::size_t a = 0; a < p.r; ++a) {
      const Poly& fa = k.generators(a, j);
      Matrix big = fa.eval(dual);
      Vector t1 = big.block(0, d, d, d) * p.G.column(a);
      Vector t2 = big.block(0, 0, d, d) * v.Gdot.column(a);
      for (std::size_t i = 0; i < d; ++i) acc[i] += t1[i] + t2[i];
    }
    for (std::size_t i = 0; i < d; ++i) out(i, j) = acc[i];
  }
  return out;
}

}  // namespace modspace::quot
