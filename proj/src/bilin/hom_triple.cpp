#include "modspace/bilin/bilin.hpp"
#include "modspace/error.hpp"
#include "modspace/exact/linalg.hpp"
#include "modspace/exact/poly_linalg.hpp"

namespace modspace::bilin {

using exact::Poly;
using exact::PolyMatrix;

namespace {

// Element k (x) e_b of F3 = k[x]^{r1 r2} for k in k[x]^{r1}.
std::vector<Poly> left_embed(const std::vector<Poly>& k, std::size_t b, std::size_t r2) {
  std::vector<Poly> out(k.size() * r2, Poly(k.front().field()));
  for (std::size_t a = 0; a < k.size(); ++a) out[a * r2 + b] = k[a];
  return out;
}

// Element e_a (x) k of F3 for k in k[x]^{r2}.
std::vector<Poly> right_embed(const std::vector<Poly>& k, std::size_t a, std::size_t r1) {
  std::vector<Poly> out(r1 * k.size(), Poly(k.front().field()));
  for (std::size_t b = 0; b < k.size(); ++b) out[a * k.size() + b] = k[b];
  return out;
}

// Coefficients c_m(x) with v = sum_m c_m k3_m.
std::vector<Poly> coordinates_in_k3(const HomTripleContext& ctx, const std::vector<Poly>& v) {
  PolyMatrix col(ctx.K3.generators.field(), v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) col(i, 0) = v[i];
  auto c = exact::solve_columns(ctx.K3.generators, col);
  if (!c) throw InternalError("hom triple: element of K1 (x) F2 + F1 (x) K2 not in K3");
  return c->column(0);
}

// phi3(v) = sum_m c_m(Z) phi3(k3_m)
Vector apply_phi3(const HomTripleContext& ctx, const std::vector<Poly>& coords, const Matrix& phi3) {
  const Matrix& z = ctx.M3.X[0];
  Vector acc = exact::zero_vector(z.field(), z.rows());
  for (std::size_t m = 0; m < coords.size(); ++m) {
    Vector t = coords[m].eval(z) * phi3.column(m);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += t[i];
  }
  return acc;
}

Vector kron_vec(const Vector& a, const Vector& b) {
  Vector out;
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x * y);
  return out;
}

void require_univariate(const BilinPoint& b) {
  if (b.n() != 1) throw DomainError("hom triples: requires n = 1");
}

}  // namespace

HomTripleContext hom_triple_context(const BilinPoint& b) {
  require_univariate(b);
  require_valid(b, "hom_triple_context");
  HomTripleContext ctx;
  ctx.M3 = target_module(b);
  ctx.K1 = quot::kernel_presentation(b.M1);
  ctx.K2 = quot::kernel_presentation(b.M2);
  ctx.K3 = quot::kernel_presentation(ctx.M3);
  return ctx;
}

HomTripleResidual hom_triple_check(const BilinPoint& b, const HomTripleContext& ctx, const HomTriple& t) {
  require_univariate(b);
  HomTripleResidual res;
  res.homs = quot::is_hom_on_generators(b.M1, ctx.K1, t.phi1) && quot::is_hom_on_generators(b.M2, ctx.K2, t.phi2) &&
             quot::is_hom_on_generators(ctx.M3, ctx.K3, t.phi3);
  const std::size_t r1 = b.M1.r, r2 = b.M2.r;
  for (std::size_t j = 0; j < ctx.K1.generators.cols(); ++j)
    for (std::size_t bb = 0; bb < r2; ++bb) {
      auto coords = coordinates_in_k3(ctx, left_embed(ctx.K1.generators.column(j), bb, r2));
      Vector lhs = apply_phi3(ctx, coords, t.phi3);
      Vector rhs = b.Pihat * kron_vec(t.phi1.column(j), b.M2.G.column(bb));
      if (!(lhs == rhs)) ++res.failures;
    }
  for (std::size_t a = 0; a < r1; ++a)
    for (std::size_t j = 0; j < ctx.K2.generators.cols(); ++j) {
      auto coords = coordinates_in_k3(ctx, right_embed(ctx.K2.generators.column(j), a, r1));
      Vector lhs = apply_phi3(ctx, coords, t.phi3);
      Vector rhs = b.Pihat * kron_vec(b.M1.G.column(a), t.phi2.column(j));
      if (!(lhs == rhs)) ++res.failures;
    }
  res.compatible = res.failures == 0;
  return res;
}

HomTriple tangent_to_triple(const BilinPoint& b, const HomTripleContext& ctx, const BilinTangentVector& v) {
  require_univariate(b);
  HomTriple t;
  t.phi1 = quot::tangent_to_hom(b.M1, ctx.K1, quot::QuotTangentVector{v.Xdot, v.Gdot});
  t.phi2 = quot::tangent_to_hom(b.M2, ctx.K2, quot::QuotTangentVector{v.Ydot, v.Hdot});
  // derivative of the induced framing Pihat (G (x) H)
  Matrix f3dot = v.Pihatdot * exact::kron(b.M1.G, b.M2.G) +
                 b.Pihat * (exact::kron(v.Gdot, b.M2.G) + exact::kron(b.M1.G, v.Hdot));
  t.phi3 = quot::tangent_to_hom(ctx.M3, ctx.K3, quot::QuotTangentVector{v.Zdot, f3dot});
  return t;
}

std::size_t hom_triple_space_dim(const BilinPoint& b, const HomTripleContext& ctx) {
  require_univariate(b);
  const Field f = b.field();
  const std::size_t d1 = b.M1.d, d2 = b.M2.d, d3 = b.d3;
  const std::size_t m1 = ctx.K1.generators.cols(), m2 = ctx.K2.generators.cols(), m3 = ctx.K3.generators.cols();
  const std::size_t r1 = b.M1.r, r2 = b.M2.r;
  const Scalar one(f, 1), minus_one(f, -1);
  auto unit = [&](std::size_t size, std::size_t j) {
    Matrix e(f, size, 1);
    e(j, 0) = one;
    return e;
  };

  exact::LinearSystem sys(f);
  std::size_t p1 = sys.add_block(d1, m1), p2 = sys.add_block(d2, m2), p3 = sys.add_block(d3, m3);
  auto add_syzygies = [&](const FramedModule& m, const quot::KernelPresentation& k, std::size_t block) {
    if (k.generators.cols() == 0) return;
    PolyMatrix syz = exact::hermite_kernel(k.generators);
    for (std::size_t s = 0; s < syz.cols(); ++s) {
      std::size_t eq = sys.add_equations(m.d);
      for (std::size_t j = 0; j < syz.rows(); ++j)
        sys.add_sandwich(eq, syz(j, s).eval(m.X[0]), block, unit(k.generators.cols(), j), one);
    }
  };
  add_syzygies(b.M1, ctx.K1, p1);
  add_syzygies(b.M2, ctx.K2, p2);
  add_syzygies(ctx.M3, ctx.K3, p3);

  auto add_phi3_terms = [&](std::size_t eq, const std::vector<Poly>& coords) {
    for (std::size_t m = 0; m < coords.size(); ++m)
      sys.add_sandwich(eq, coords[m].eval(ctx.M3.X[0]), p3, unit(m3, m), one);
  };
  for (std::size_t j = 0; j < m1; ++j)
    for (std::size_t bb = 0; bb < r2; ++bb) {
      std::size_t eq = sys.add_equations(d3);
      add_phi3_terms(eq, coordinates_in_k3(ctx, left_embed(ctx.K1.generators.column(j), bb, r2)));
      // Pihat (phi1 e_j (x) h_b) = Pihat (I (x) h_b) phi1 e_j
      Matrix left = b.Pihat * exact::kron(Matrix::identity(f, d1), Matrix::column_vector(b.M2.G.column(bb)));
      sys.add_sandwich(eq, left, p1, unit(m1, j), minus_one);
    }
  for (std::size_t a = 0; a < r1; ++a)
    for (std::size_t j = 0; j < m2; ++j) {
      std::size_t eq = sys.add_equations(d3);
      add_phi3_terms(eq, coordinates_in_k3(ctx, right_embed(ctx.K2.generators.column(j), a, r1)));
      Matrix left = b.Pihat * exact::kron(Matrix::column_vector(b.M1.G.column(a)), Matrix::identity(f, d2));
      sys.add_sandwich(eq, left, p2, unit(m2, j), minus_one);
    }
  return sys.unknowns() - exact::rank(sys.matrix());
}

}  // namespace modspace::bilin
