#include "modspace/error.hpp"
#include "modspace/exact/linalg.hpp"
#include "modspace/quot/quot.hpp"

namespace modspace::quot {

using exact::ParamMatrix;
using exact::Poly;

std::string to_string(LimitBranch b) {
  switch (b) {
    case LimitBranch::distinct_support: return "distinct_support";
    case LimitBranch::scalar_action: return "scalar_action";
    case LimitBranch::square_zero: return "square_zero";
  }
  return "unknown";
}

namespace {

bool is_scalar(const Matrix& x) {
  return x == Matrix::identity(x.field(), x.rows()).scaled(x(0, 0));
}

// Index of an action matrix that is not a multiple of the identity.
std::optional<std::size_t> nonscalar_index(const FramedModule& p) {
  for (std::size_t i = 0; i < p.n; ++i)
    if (!is_scalar(p.X[i])) return i;
  return std::nullopt;
}

}  // namespace

std::optional<std::size_t> support_size_d2(const FramedModule& p) {
  if (p.d != 2) throw DomainError("support_size_d2: requires d = 2");
  auto j = nonscalar_index(p);
  if (!j) return 1;
  // every X_i is a polynomial in the non-scalar X_j, so its eigenvalues decide
  auto roots = exact::roots_in_field(modcore::char_poly(p.X[*j]));
  if (!roots.split) return std::nullopt;
  return roots.roots.size();
}

QuotFamily quot2_limit_family(const FramedModule& p) {
  if (p.d != 2) throw DomainError("quot2_limit_family: requires d = 2");
  modcore::require_valid(p, "quot2_limit_family");
  const Field f = p.field();
  QuotFamily fam;
  fam.n = p.n;
  fam.r = p.r;
  fam.G = ParamMatrix::constant(p.G);
  for (const auto& x : p.X) fam.X.push_back(ParamMatrix::constant(x));

  auto size = support_size_d2(p);
  if (!size) throw DomainError("quot2_limit_family: support does not split over the field");
  if (*size == 2) {
    fam.branch = LimitBranch::distinct_support;
    return fam;
  }
  const Poly t = Poly::variable(f);
  auto j = nonscalar_index(p);
  if (!j) {
    // m M = 0 after translation: split the point along x_1
    fam.branch = LimitBranch::scalar_action;
    fam.X[0](1, 1) += t;
    return fam;
  }
  // m^2 M = 0, m M != 0: X_i = c_i + lambda_i N with N^2 = 0
  fam.branch = LimitBranch::square_zero;
  const Scalar cj = exact::roots_in_field(modcore::char_poly(p.X[*j])).roots.front().value;
  const Matrix N = p.X[*j] - Matrix::identity(f, 2).scaled(cj);
  std::optional<std::size_t> col;
  for (std::size_t a = 0; a < p.r && !col; ++a)
    if (!exact::is_zero_vector(N * p.G.column(a))) col = a;
  if (!col) throw InternalError("quot2_limit_family: no generator outside ker N");
  const Vector v = p.G.column(*col);
  const Matrix B = Matrix::from_columns(f, 2, {v, N * v});
  const Matrix Binv = *exact::inverse(B);
  // N(t) = [[0, 0], [1, t]] in the basis (v, N v): x^2 = t x on the cyclic vector
  ParamMatrix Nt(f, 2, 2);
  Nt(1, 0) = Poly(Scalar(f, 1));
  Nt(1, 1) = t;
  const ParamMatrix conj = ParamMatrix::constant(B) * Nt * ParamMatrix::constant(Binv);
  for (std::size_t i = 0; i < p.n; ++i) {
    // X_i = c_i I + lambda_i N, read off from X_i v = c_i v + lambda_i N v
    Matrix coords = Binv * Matrix::column_vector(p.X[i] * v);
    const Scalar ci = coords(0, 0), li = coords(1, 0);
    if (!(p.X[i] == Matrix::identity(f, 2).scaled(ci) + N.scaled(li)))
      throw InternalError("quot2_limit_family: action is not a polynomial in N");
    ParamMatrix xi = ParamMatrix::constant(Matrix::identity(f, 2).scaled(ci));
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b) xi(a, b) += conj(a, b).scaled(li);
    fam.X[i] = xi;
  }
  return fam;
}

FramedModule evaluate_family(const QuotFamily& family, const Scalar& t0) {
  FramedModule m{family.n, 2, family.r, {}, exact::evaluate_param(family.G, t0)};
  for (const auto& x : family.X) m.X.push_back(exact::evaluate_param(x, t0));
  return m;
}

}  // namespace modspace::quot
