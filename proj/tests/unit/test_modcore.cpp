#include "doctest.h"
#include "modspace/error.hpp"
#include "modspace/exact/linalg.hpp"
#include "modspace/modcore/framed_module.hpp"

using namespace modspace;
using namespace modspace::exact;
using namespace modspace::modcore;

namespace {

const Field kQ = Field::rationals();

Vector pt(Field f, std::initializer_list<long long> c) {
  Vector v;
  for (long long x : c) v.emplace_back(f, x);
  return v;
}

Poly px(Field f, std::initializer_list<long long> c) { return Poly(f, pt(f, c)); }

Matrix nilpotent2(Field f) { return Matrix::from_rows(f, {{0, 0}, {1, 0}}); }

// Random monic polynomial that splits into linear factors over f.
Poly random_split_poly(Field f, std::size_t deg, Rng& rng) {
  Poly p(Scalar(f, 1));
  for (std::size_t k = 0; k < deg; ++k) p *= Poly::linear_root(random_scalar(f, rng, 2));
  return p;
}

}  // namespace

TEST_CASE("validate_framed examples") {
  FramedModule ok{1, 2, 2, {Matrix::from_rows(kQ, {{0, 0}, {0, 1}})}, Matrix::identity(kQ, 2)};
  CHECK(validate_framed(ok).valid());

  FramedModule nc{2, 2, 2, {Matrix::from_rows(kQ, {{0, 1}, {0, 0}}), Matrix::from_rows(kQ, {{0, 0}, {1, 0}})},
                  Matrix::identity(kQ, 2)};
  auto v = validate_framed(nc);
  CHECK_FALSE(v.commuting);
  REQUIRE(v.noncommuting_pair);
  CHECK(v.noncommuting_pair->first == 0);
  CHECK(v.noncommuting_pair->second == 1);
  CHECK_FALSE(v.commutator.is_zero());

  FramedModule ng{1, 2, 1, {Matrix::from_rows(kQ, {{0, 0}, {0, 1}})}, Matrix::from_rows(kQ, {{1}, {0}})};
  auto w = validate_framed(ng);
  CHECK(w.commuting);
  CHECK_FALSE(w.generating);
  REQUIRE(w.invariant_subspace);
  CHECK(w.invariant_subspace->cols() == 1);

  FramedModule bad{1, 2, 2, {Matrix::identity(kQ, 3)}, Matrix::identity(kQ, 2)};
  CHECK_THROWS_AS(validate_framed(bad), ShapeError);
}

TEST_CASE("tensor_over_S examples") {
  auto a = make_cyclic(px(kQ, {0, 1}));
  auto b = make_cyclic(px(kQ, {-1, 1}));
  CHECK(tensor_over_S(a, b).dim12 == 0);

  auto deg = make_degenerate(2, 2, Matrix::identity(kQ, 2));
  auto t = tensor_over_S(deg, deg);
  CHECK(t.dim12 == 4);

  auto sq = make_cyclic(px(kQ, {0, 0, 1}));
  auto s = tensor_over_S(sq, sq);
  CHECK(s.dim12 == 2);
  CHECK(rank(s.q) == 2);
  // induced action is again the nilpotent block up to similarity
  CHECK_FALSE(s.action[0].is_zero());
  CHECK((s.action[0] * s.action[0]).is_zero());

  FramedModule two{2, 1, 1, {Matrix::identity(kQ, 1), Matrix::identity(kQ, 1)}, Matrix::identity(kQ, 1)};
  CHECK_THROWS_AS(tensor_over_S(a, two), DomainError);
}

TEST_CASE("tensor_over_S is symmetric in dimension") {
  Field f5 = Field::prime(5);
  Rng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 1 + trial % 2;
    auto m1 = random_framed(f5, n, 1 + trial % 3, 1 + trial % 2, rng);
    auto m2 = random_framed(f5, n, 1 + (trial / 3) % 3, 2, rng);
    // make the supports overlap sometimes
    if (trial % 2 == 0) m2 = m1;
    CHECK(tensor_over_S(m1, m2).dim12 == tensor_over_S(m2, m1).dim12);
  }
}

TEST_CASE("cyclic tensor products have dimension deg gcd") {
  Field f3 = Field::prime(3);
  Rng rng(19);
  for (int trial = 0; trial < 40; ++trial) {
    Field f = trial % 2 ? f3 : kQ;
    Poly p = random_split_poly(f, 1 + trial % 3, rng);
    Poly q = random_split_poly(f, 1 + (trial / 2) % 3, rng);
    if (trial % 5 == 0) q = p * Poly::linear_root(Scalar(f, 1));
    auto t = tensor_over_S(make_cyclic(p), make_cyclic(q));
    CHECK(static_cast<int>(t.dim12) == std::max(0, gcd(p, q).degree()));
  }
}

TEST_CASE("annihilator_algebra_dim") {
  CHECK(annihilator_algebra_dim(FramedModule{1, 2, 2, {Matrix::from_rows(kQ, {{0, 0}, {0, 1}})}, Matrix::identity(kQ, 2)}) == 2);
  CHECK(annihilator_algebra_dim(FramedModule{1, 2, 1, {nilpotent2(kQ)}, Matrix::from_rows(kQ, {{1}, {0}})}) == 2);
  CHECK(annihilator_algebra_dim(make_degenerate(2, 2, Matrix::identity(kQ, 2), 2)) == 1);
  Field f5 = Field::prime(5);
  Rng rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix a = random_full_rank(f5, 3, 4, rng);
    CHECK(annihilator_algebra_dim(make_degenerate(3, 4, a, 1 + trial % 3)) == 1);
  }
}

TEST_CASE("support_univariate") {
  auto s = support_univariate(FramedModule{1, 2, 2, {Matrix::from_rows(kQ, {{0, 0}, {0, 1}})}, Matrix::identity(kQ, 2)});
  CHECK(s.split);
  REQUIRE(s.points.size() == 2);
  CHECK(s.points[0].value == Scalar(kQ, 0));
  CHECK(s.points[1].value == Scalar(kQ, 1));

  auto n = support_univariate(make_cyclic(px(kQ, {0, 0, 1})));
  CHECK(n.split);
  REQUIRE(n.points.size() == 1);
  CHECK(n.points[0].multiplicity == 2);

  CHECK_FALSE(support_univariate(make_cyclic(px(kQ, {1, 0, 1}))).split);
  CHECK_THROWS_AS(support_univariate(make_degenerate(1, 1, Matrix::identity(kQ, 1), 2)), DomainError);
}

TEST_CASE("make_tuple_of_points") {
  auto m = make_tuple_of_points({pt(kQ, {0}), pt(kQ, {1})}, Matrix::identity(kQ, 2));
  CHECK(m.X[0] == Matrix::from_rows(kQ, {{0, 0}, {0, 1}}));

  auto c = make_cyclic_tuple_of_points({pt(kQ, {0}), pt(kQ, {1})});
  CHECK(c.r == 1);
  // S/(x(x-1)): x^2 = x on the module
  CHECK(c.X[0] * c.X[0] == c.X[0]);

  auto two = make_cyclic_tuple_of_points({pt(kQ, {0, 0}), pt(kQ, {1, 2})});
  CHECK(two.X[0] == Matrix::from_rows(kQ, {{0, 0}, {0, 1}}));
  CHECK(two.X[1] == Matrix::from_rows(kQ, {{0, 0}, {0, 2}}));

  CHECK_THROWS_AS(make_tuple_of_points({pt(kQ, {1}), pt(kQ, {1})}, Matrix::identity(kQ, 2)), DomainError);
  CHECK_THROWS_AS(make_tuple_of_points({pt(kQ, {0}), pt(kQ, {1})}, Matrix::from_rows(kQ, {{1}, {0}})), DomainError);
}

TEST_CASE("tuple of points support recovers the points") {
  Field f7 = Field::prime(7);
  for (long long a = 0; a < 7; ++a)
    for (long long b = a + 1; b < 7; b += 2) {
      auto m = make_cyclic_tuple_of_points({pt(f7, {b}), pt(f7, {a})});
      CHECK(validate_framed(m).valid());
      auto s = support_univariate(m);
      REQUIRE(s.points.size() == 2);
      CHECK(s.points[0].value == Scalar(f7, a));
      CHECK(s.points[1].value == Scalar(f7, b));
    }
}

TEST_CASE("make_degenerate") {
  CHECK(validate_framed(make_degenerate(2, 2, Matrix::identity(kQ, 2))).valid());
  CHECK(validate_framed(make_degenerate(2, 3, Matrix::from_rows(kQ, {{1, 0, 0}, {0, 1, 0}}))).valid());
  CHECK_THROWS_AS(make_degenerate(2, 2, Matrix::from_rows(kQ, {{1, 1}, {1, 1}})), DomainError);
}

TEST_CASE("canonical form identifies equal kernels") {
  Field f5 = Field::prime(5);
  Rng rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    auto m = random_framed(f5, 1 + trial % 2, 1 + trial % 3, 1 + trial % 3, rng);
    auto g = random_invertible(f5, m.d, rng);
    auto moved = gauge_transform(m, g);
    CHECK(same_kernel(m, moved));
    auto c = canonical_form(m);
    CHECK(canonical_form(c) == c);
  }
  // for r = d every framing of (S/m)^d has kernel m S^d; for r > d the kernels differ
  auto a = make_degenerate(2, 2, Matrix::identity(kQ, 2));
  auto b = make_degenerate(2, 2, Matrix::from_rows(kQ, {{1, 1}, {0, 1}}));
  CHECK(same_kernel(a, b));
  auto c = make_degenerate(2, 3, Matrix::from_rows(kQ, {{1, 0, 0}, {0, 1, 0}}));
  auto d = make_degenerate(2, 3, Matrix::from_rows(kQ, {{1, 0, 0}, {0, 0, 1}}));
  CHECK_FALSE(same_kernel(c, d));
}
