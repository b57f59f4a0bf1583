#include "doctest.h"
#include "modspace/bilin/bilin.hpp"
#include "modspace/error.hpp"
#include "modspace/exact/linalg.hpp"

using namespace modspace;
using namespace modspace::exact;
using namespace modspace::modcore;
using namespace modspace::bilin;

namespace {

const Field kQ = Field::rationals();

Vector pt(Field f, std::initializer_list<long long> c) {
  Vector v;
  for (long long x : c) v.emplace_back(f, x);
  return v;
}

Poly px(Field f, std::initializer_list<long long> c) { return Poly(f, pt(f, c)); }

BilinPoint canonical_main(Field f) {
  return main_component_point({pt(f, {0}), pt(f, {1})}, Matrix::identity(f, 2), Matrix::identity(f, 2));
}

BilinPoint canonical_degenerate(Field f) {
  return degenerate_point(2, 2, 2, Matrix::identity(f, 2), Matrix::identity(f, 2),
                          Matrix::from_rows(f, {{1, 0, 0, 0}, {0, 1, 0, 0}}));
}

// Multiplication S/(f) (x) S/(f) -> S/(f) in the monomial basis, framed by the given matrices.
BilinPoint cyclic_point(const Poly& f, const Matrix& G1, const Matrix& G2) {
  FramedModule c = make_cyclic(f);
  const std::size_t d = c.d;
  const Field fl = f.field();
  Matrix pi(fl, d, d * d);
  Matrix power = Matrix::identity(fl, d);
  std::vector<Matrix> powers;
  for (std::size_t k = 0; k < d; ++k, power = c.X[0] * power) powers.push_back(power);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      Vector v = (powers[a] * powers[b]).column(0);  // x^a x^b applied to 1
      for (std::size_t s = 0; s < d; ++s) pi(s, a * d + b) = v[s];
    }
  FramedModule m1{1, d, G1.cols(), c.X, G1}, m2{1, d, G2.cols(), c.X, G2};
  return BilinPoint{m1, m2, d, c.X, pi};
}

BilinPoint random_gauge(const BilinPoint& b, Rng& rng) {
  const Field f = b.field();
  return gauge_transform(b, random_invertible(f, b.M1.d, rng), random_invertible(f, b.M2.d, rng),
                         random_invertible(f, b.d3, rng));
}

}  // namespace

TEST_CASE("validate_bilin examples") {
  auto main = canonical_main(kQ);
  CHECK(validate_bilin(main).valid());

  auto bad = main;
  bad.Pihat(0, 1) += Scalar(kQ, 1);
  auto v = validate_bilin(bad);
  CHECK_FALSE(v.valid());
  CHECK_FALSE(v.equivariant);
  REQUIRE(v.failing_index);
  CHECK_FALSE(v.residual.is_zero());

  CHECK(validate_bilin(canonical_degenerate(kQ)).valid());

  auto rank_def = canonical_degenerate(kQ);
  rank_def.Pihat = Matrix::from_rows(kQ, {{1, 0, 0, 0}, {2, 0, 0, 0}});
  CHECK_FALSE(validate_bilin(rank_def).surjective);

  auto shape = main;
  shape.Pihat = Matrix(kQ, 2, 3);
  CHECK_THROWS_AS(validate_bilin(shape), ShapeError);
}

TEST_CASE("factor_membership examples") {
  auto cyc = make_cyclic_tuple_of_points({pt(kQ, {0}), pt(kQ, {1})});
  auto p = factor_membership(cyc, cyc, cyc);
  REQUIRE(p);
  // the forced isomorphism: componentwise product in the idempotent basis
  CHECK(p->Pihat == Matrix::from_rows(kQ, {{1, 0, 0, 0}, {0, 0, 0, 1}}));
  CHECK(membership_solution_dim(cyc, cyc, cyc) == std::optional<std::size_t>(0));

  auto deg = make_degenerate(2, 2, Matrix::identity(kQ, 2));
  auto sq = make_cyclic(px(kQ, {0, 0, 1}));
  FramedModule sq4{1, 2, 4, sq.X, Matrix::from_rows(kQ, {{1, 0, 0, 0}, {0, 0, 0, 0}})};
  CHECK_FALSE(factor_membership(deg, deg, sq4));

  auto a = make_cyclic(px(kQ, {0, -1, 1}));  // x(x-1)
  auto b = make_cyclic(px(kQ, {0, -2, 1}));  // x(x-2)
  CHECK_FALSE(factor_membership(a, b, a));
  CHECK(modcore::tensor_over_S(a, b).dim12 == 1);

  CHECK_THROWS_AS(factor_membership(deg, deg, cyc), ShapeError);
}

TEST_CASE("factor_membership recovers constructed points") {
  Field f5 = Field::prime(5);
  Rng rng(41);
  std::vector<BilinPoint> points{canonical_main(f5), canonical_degenerate(f5),
                                 cyclic_point(px(f5, {0, 0, 1}), Matrix::identity(f5, 2), Matrix::identity(f5, 2)),
                                 main_component_point({pt(f5, {0}), pt(f5, {1}), pt(f5, {2})},
                                                      Matrix::identity(f5, 3), Matrix::identity(f5, 3))};
  for (int trial = 0; trial < 10; ++trial)
    points.push_back(degenerate_point(3, 3, 4, random_invertible(f5, 3, rng), random_full_rank(f5, 3, 4, rng),
                                      random_full_rank(f5, 3, 9, rng)));
  for (const auto& b : points) {
    for (int k = 0; k < 3; ++k) {
      BilinPoint moved = random_gauge(b, rng);
      REQUIRE(validate_bilin(moved).valid());
      FramedModule m3 = target_module(moved);
      auto found = factor_membership(moved.M1, moved.M2, m3);
      REQUIRE(found);
      CHECK(found->Pihat == moved.Pihat);
      CHECK(membership_solution_dim(moved.M1, moved.M2, m3) == std::optional<std::size_t>(0));
    }
  }
}

TEST_CASE("bilin_tangent examples") {
  for (std::size_t n = 1; n <= 3; ++n) {
    FramedModule one{n, 1, 1, std::vector<Matrix>(n, Matrix::from_rows(kQ, {{2}})), Matrix::identity(kQ, 1)};
    BilinPoint b{one, one, 1, one.X, Matrix::identity(kQ, 1)};
    CHECK(bilin_tangent(b, true).dim == n);
    CHECK(bilin_dims(n, 1, 1, 1).main_dim == n);
  }
  CHECK(bilin_tangent(canonical_main(kQ), true).dim == 6);
  auto deg = bilin_tangent(canonical_degenerate(kQ), true);
  CHECK(deg.dim >= 4);
  CHECK(*bilin_dims(1, 2, 2, 2).degenerate_dim == 4);
}

TEST_CASE("bilin_tangent is gauge invariant") {
  Field f5 = Field::prime(5);
  Rng rng(5);
  auto main = canonical_main(f5);
  auto deg = canonical_degenerate(f5);
  std::size_t main_dim = bilin_tangent(main).dim, deg_dim = bilin_tangent(deg).dim;
  for (int trial = 0; trial < 8; ++trial) {
    CHECK(bilin_tangent(random_gauge(main, rng)).dim == main_dim);
    CHECK(bilin_tangent(random_gauge(deg, rng)).dim == deg_dim);
  }
}

TEST_CASE("tangent vectors satisfy the first-order system and give compatible Hom triples") {
  Field f5 = Field::prime(5);
  Rng rng(77);
  std::vector<BilinPoint> points{canonical_main(f5), canonical_degenerate(f5),
                                 cyclic_point(px(f5, {0, 0, 1}), Matrix::identity(f5, 2), Matrix::identity(f5, 2)),
                                 cyclic_point(px(f5, {0, 0, 1}), Matrix::from_rows(f5, {{1}, {0}}),
                                              Matrix::from_rows(f5, {{1, 2}, {0, 1}}))};
  for (int k = 0; k < 2; ++k) points.push_back(random_gauge(points[k], rng));
  for (const auto& b : points) {
    auto t = bilin_tangent(b, true);
    auto ctx = hom_triple_context(b);
    HomTriple zero{Matrix(f5, b.M1.d, ctx.K1.generators.cols()), Matrix(f5, b.M2.d, ctx.K2.generators.cols()),
                   Matrix(f5, b.d3, ctx.K3.generators.cols())};
    CHECK(hom_triple_check(b, ctx, zero).ok());
    std::vector<Vector> flat;
    for (const auto& v : t.basis) {
      CHECK(satisfies_first_order(b, v));
      HomTriple tr = tangent_to_triple(b, ctx, v);
      CHECK(hom_triple_check(b, ctx, tr).ok());
      Vector w = vec(tr.phi1);
      for (const auto& x : vec(tr.phi2)) w.push_back(x);
      for (const auto& x : vec(tr.phi3)) w.push_back(x);
      flat.push_back(w);
    }
    // the tangent space maps isomorphically onto the compatible triples
    if (!flat.empty()) {
      Span s(f5, flat.front().size());
      for (const auto& w : flat) s.add(w);
      CHECK(s.dim() == t.dim);
    }
    CHECK(hom_triple_space_dim(b, ctx) == t.dim);
  }
}

TEST_CASE("random triples are rejected at the main point") {
  Field f5 = Field::prime(5);
  Rng rng(3);
  auto b = canonical_main(f5);
  auto ctx = hom_triple_context(b);
  int rejected = 0;
  for (int trial = 0; trial < 20; ++trial) {
    HomTriple t{random_matrix(f5, 2, ctx.K1.generators.cols(), rng), random_matrix(f5, 2, ctx.K2.generators.cols(), rng),
                random_matrix(f5, 2, ctx.K3.generators.cols(), rng)};
    auto res = hom_triple_check(b, ctx, t);
    if (!res.ok()) {
      ++rejected;
      CHECK(res.failures > 0);
    }
  }
  CHECK(rejected >= 19);
}

TEST_CASE("main_component_point and degenerate_point") {
  auto main = canonical_main(kQ);
  CHECK(main.Pihat == Matrix::from_rows(kQ, {{1, 0, 0, 0}, {0, 0, 0, 1}}));
  auto one = main_component_point({pt(kQ, {0})}, Matrix::identity(kQ, 1), Matrix::identity(kQ, 1));
  CHECK(one.Pihat == Matrix::identity(kQ, 1));
  auto three = main_component_point({pt(kQ, {0}), pt(kQ, {1}), pt(kQ, {2})}, Matrix::identity(kQ, 3),
                                    Matrix::identity(kQ, 3));
  CHECK(validate_bilin(three).valid());
  CHECK_THROWS_AS(main_component_point({pt(kQ, {0}), pt(kQ, {0})}, Matrix::identity(kQ, 2), Matrix::identity(kQ, 2)),
                  DomainError);

  CHECK(validate_bilin(canonical_degenerate(kQ)).valid());
  CHECK_THROWS_AS(degenerate_point(2, 2, 2, Matrix::identity(kQ, 2), Matrix::identity(kQ, 2),
                                   Matrix::from_rows(kQ, {{1, 0, 0, 0}, {1, 0, 0, 0}})),
                  DomainError);
  Field f5 = Field::prime(5);
  Rng rng(6);
  for (int trial = 0; trial < 5; ++trial)
    CHECK(validate_bilin(degenerate_point(3, 3, 3, random_invertible(f5, 3, rng), random_invertible(f5, 3, rng),
                                          random_full_rank(f5, 3, 9, rng)))
              .valid());
}

TEST_CASE("tangent dimension dominates the component dimensions") {
  Field f7 = Field::prime(7);
  Rng rng(13);
  for (std::size_t n = 1; n <= 2; ++n) {
    std::vector<Vector> pts{pt(f7, {0}), pt(f7, {1})};
    if (n == 2) pts = {pt(f7, {0, 3}), pt(f7, {1, 5})};
    for (std::size_t r = 2; r <= 3; ++r) {
      auto b = main_component_point(pts, random_full_rank(f7, 2, r, rng), random_full_rank(f7, 2, r, rng));
      auto rep = bilin_dims(n, 2, r, r);
      CHECK(bilin_tangent(b).dim >= rep.main_dim);
      auto z = degenerate_point(2, r, r, random_full_rank(f7, 2, r, rng), random_full_rank(f7, 2, r, rng),
                                random_full_rank(f7, 2, 4, rng), n);
      CHECK(bilin_tangent(z).dim >= *rep.degenerate_dim);
    }
  }
}

TEST_CASE("bilin_dims examples") {
  auto a = bilin_dims(1, 2, 2, 2);
  CHECK(a.main_dim == 6);
  CHECK(*a.degenerate_dim == 4);
  CHECK_FALSE(a.reducible_by_count);
  CHECK_FALSE(a.reducible_by_secant);
  CHECK(a.irreducible);
  auto b = bilin_dims(1, 3, 3, 3);
  CHECK(b.main_dim == 15);
  CHECK(*b.degenerate_dim == 18);
  CHECK(b.reducible_by_count);
  CHECK(b.reducible_by_secant);
  CHECK_FALSE(b.irreducible);
  auto c = bilin_dims(5, 3, 3, 3);
  CHECK(c.main_dim == 27);
  CHECK(*c.degenerate_dim == 18);
  CHECK_FALSE(c.reducible_by_count);
  CHECK(c.reducible_by_secant);
  CHECK_FALSE(bilin_dims(1, 3, 2, 3).degenerate_dim.has_value());
}

TEST_CASE("count reducibility is exactly the dimension comparison") {
  for (std::size_t n = 1; n <= 8; ++n)
    for (std::size_t d = 1; d <= 5; ++d)
      for (std::size_t r1 = d; r1 <= d + 2; ++r1)
        for (std::size_t r2 = d; r2 <= d + 2; ++r2) {
          auto rep = bilin_dims(n, d, r1, r2);
          CHECK(rep.reducible_by_count == (*rep.degenerate_dim > rep.main_dim));
        }
}
