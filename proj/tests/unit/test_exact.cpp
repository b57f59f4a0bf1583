#include <functional>

#include "doctest.h"
#include "modspace/error.hpp"
#include "modspace/exact/counting.hpp"
#include "modspace/exact/linalg.hpp"
#include "modspace/exact/param.hpp"
#include "modspace/exact/poly_linalg.hpp"
#include "modspace/exact/random.hpp"

using namespace modspace;
using namespace modspace::exact;

namespace {

const Field kQ = Field::rationals();

Poly px(Field f, std::initializer_list<long long> c) {
  std::vector<Scalar> v;
  for (long long x : c) v.emplace_back(f, x);
  return Poly(f, v);
}

// Independent count of d-dimensional subspaces of F_q^r: builds every reduced row echelon
// d x r matrix explicitly from its pivot set and confirms each one is fixed by rref.
std::uint64_t count_rref_forms(unsigned d, unsigned r, std::uint64_t q) {
  Field f = Field::prime(q);
  std::uint64_t count = 0;
  std::vector<std::size_t> piv;
  std::function<void(std::size_t)> choose = [&](std::size_t start) {
    if (piv.size() == d) {
      std::vector<std::pair<std::size_t, std::size_t>> free;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = piv[i] + 1; j < r; ++j) {
          bool pivot_col = false;
          for (auto p : piv) pivot_col |= (p == j);
          if (!pivot_col) free.emplace_back(i, j);
        }
      std::uint64_t total = 1;
      for (std::size_t k = 0; k < free.size(); ++k) total *= q;
      for (std::uint64_t code = 0; code < total; ++code) {
        Matrix m(f, d, r);
        for (std::size_t i = 0; i < d; ++i) m(i, piv[i]) = Scalar(f, 1);
        std::uint64_t c = code;
        for (auto [i, j] : free) {
          m(i, j) = Scalar(f, static_cast<long long>(c % q));
          c /= q;
        }
        REQUIRE(rref(m).reduced == m);
        ++count;
      }
      return;
    }
    for (std::size_t j = start; j < r; ++j) {
      piv.push_back(j);
      choose(j + 1);
      piv.pop_back();
    }
  };
  choose(0);
  return count;
}

}  // namespace

TEST_CASE("scalar arithmetic and parsing") {
  Field f5 = Field::prime(5);
  CHECK(Scalar::parse(kQ, "3/6") == Scalar::rational(1, 2));
  CHECK(Scalar::parse(f5, "-1") == Scalar(f5, 4));
  CHECK((Scalar(f5, 2) * Scalar(f5, 3)).residue() == 1);
  CHECK(Scalar(f5, 3).inverse() == Scalar(f5, 2));
  CHECK_THROWS_AS(Scalar(f5, 0).inverse(), DomainError);
  CHECK_THROWS_AS(Scalar(f5, 1) + Scalar(kQ, 1), FieldMismatch);
  CHECK_THROWS_AS(Field::prime(6), DomainError);
  CHECK_THROWS_AS(Field::parse("F:x"), ParseError);
  CHECK(Field::parse("F:7") == Field::prime(7));
  CHECK(Field::parse("Q").is_rational());
  CHECK(Scalar::rational(-4, 6).to_string() == "-2/3");
  // large prime arithmetic stays exact
  Field big = Field::prime(4611686018427387847ULL);
  Scalar a(big, 4611686018427387000LL);
  CHECK(a * a.inverse() == Scalar(big, 1));
}

TEST_CASE("rank_and_kernel examples") {
  auto id = rank_and_kernel(Matrix::identity(kQ, 3));
  CHECK(id.rank == 3);
  CHECK(id.kernel_basis.empty());

  auto z = rank_and_kernel(Matrix(kQ, 2, 4));
  CHECK(z.rank == 0);
  CHECK(z.kernel_basis.size() == 4);

  auto p = rank_and_kernel(Matrix::from_rows(kQ, {{1, 2}, {2, 4}}));
  CHECK(p.rank == 1);
  REQUIRE(p.kernel_basis.size() == 1);
  const Vector& v = p.kernel_basis[0];
  // proportional to (-2, 1)
  CHECK(v[0] == v[1] * Scalar(kQ, -2));
  CHECK(!v[1].is_zero());
}

TEST_CASE("rank plus nullity on random matrices over F5") {
  Field f5 = Field::prime(5);
  Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 1 + trial % 6;
    Matrix m = random_matrix(f5, n, n, rng);
    if (trial % 3 == 0 && n > 1) {
      // force a dependency
      for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = m(0, j) * Scalar(f5, 2);
    }
    auto rk = rank_and_kernel(m);
    CHECK(rk.rank + rk.kernel_basis.size() == n);
    for (const auto& v : rk.kernel_basis) CHECK(is_zero_vector(m * v));
  }
}

TEST_CASE("solve examples and random consistency") {
  Matrix b = Matrix::from_rows(kQ, {{1, 2}, {3, 4}});
  auto x = solve(Matrix::identity(kQ, 2), b);
  REQUIRE(x);
  CHECK(*x == b);

  CHECK_FALSE(solve(Matrix(kQ, 2, 2), b));

  auto h = solve(Matrix::from_rows(kQ, {{2}}), Matrix::from_rows(kQ, {{3}}));
  REQUIRE(h);
  CHECK((*h)(0, 0) == Scalar::rational(3, 2));

  CHECK_THROWS_AS(solve(Matrix(kQ, 2, 2), Matrix(kQ, 3, 1)), ShapeError);

  Field f5 = Field::prime(5);
  Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    Matrix a = random_matrix(f5, 4, 3, rng);
    Matrix rhs = random_matrix(f5, 4, 2, rng);
    auto sol = solve(a, rhs);
    if (sol) {
      CHECK(a * *sol == rhs);
    } else {
      CHECK(rank(hstack(a, rhs)) > rank(a));
    }
  }
}

TEST_CASE("determinant and inverse") {
  Matrix m = Matrix::from_rows(kQ, {{2, 1}, {7, 4}});
  CHECK(determinant(m) == Scalar(kQ, 1));
  auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(m * *inv == Matrix::identity(kQ, 2));
  CHECK_FALSE(inverse(Matrix::from_rows(kQ, {{1, 2}, {2, 4}})));
}

TEST_CASE("span keeps an independent basis") {
  Span s(kQ, 3);
  CHECK(s.add({Scalar(kQ, 1), Scalar(kQ, 2), Scalar(kQ, 0)}));
  CHECK_FALSE(s.add({Scalar(kQ, 2), Scalar(kQ, 4), Scalar(kQ, 0)}));
  CHECK(s.add({Scalar(kQ, 0), Scalar(kQ, 0), Scalar(kQ, 5)}));
  CHECK(s.dim() == 2);
  CHECK(s.contains({Scalar(kQ, 1), Scalar(kQ, 2), Scalar(kQ, 3)}));
  CHECK_FALSE(s.contains({Scalar(kQ, 1), Scalar(kQ, 0), Scalar(kQ, 0)}));
}

TEST_CASE("polynomials") {
  Poly f = px(kQ, {-2, 1}) * px(kQ, {-2, 1}) * px(kQ, {3, 1});  // (x-2)^2 (x+3)
  auto rs = roots_in_field(f);
  CHECK(rs.split);
  REQUIRE(rs.roots.size() == 2);
  CHECK(rs.roots[0].value == Scalar(kQ, -3));
  CHECK(rs.roots[1].value == Scalar(kQ, 2));
  CHECK(rs.roots[1].multiplicity == 2);

  CHECK_FALSE(roots_in_field(px(kQ, {1, 0, 1})).split);
  Field f5 = Field::prime(5);
  auto r5 = roots_in_field(px(f5, {1, 0, 1}));  // x^2 + 1 = (x-2)(x-3) mod 5
  CHECK(r5.split);
  CHECK(r5.roots.size() == 2);

  Field big = Field::prime(1000003);
  auto rb = roots_in_field(px(big, {6, -5, 1}));  // (x-2)(x-3)
  CHECK(rb.split);
  REQUIRE(rb.roots.size() == 2);

  CHECK(gcd(px(kQ, {0, 0, 1}), px(kQ, {0, 1})) == px(kQ, {0, 1}));
  auto [qq, rr] = divmod(px(kQ, {1, 0, 1}), px(kQ, {1, 1}));
  CHECK(qq == px(kQ, {-1, 1}));
  CHECK(rr == px(kQ, {2}));

  Matrix j = Matrix::from_rows(kQ, {{0, 0}, {1, 0}});
  CHECK(px(kQ, {0, 0, 1}).eval(j).is_zero());
}

TEST_CASE("hermite_kernel of (x^2, x)") {
  PolyMatrix p(kQ, 1, 2);
  p(0, 0) = px(kQ, {0, 0, 1});
  p(0, 1) = px(kQ, {0, 1});
  PolyMatrix k = hermite_kernel(p);
  CHECK((p * k).is_zero());
  // The kernel is free of rank one, generated by (1, -x).
  REQUIRE(k.cols() == 1);
  PolyMatrix expected(kQ, 2, 1);
  expected(0, 0) = px(kQ, {1});
  expected(1, 0) = px(kQ, {0, -1});
  auto c = solve_columns(k, expected);
  REQUIRE(c);
  CHECK((*c)(0, 0).degree() == 0);
  // Truncated linear algebra: kernel elements of degree <= D form a space of dimension D.
  for (std::size_t deg = 1; deg <= 5; ++deg) CHECK(truncated_nullity(p, deg) == deg);
  CHECK(kernel_stable(p, k, 6));
}

TEST_CASE("hermite_kernel trivial cases") {
  CHECK(hermite_kernel(PolyMatrix::identity(kQ, 2)).cols() == 0);
  PolyMatrix z(kQ, 1, 1);
  PolyMatrix k = hermite_kernel(z);
  REQUIRE(k.cols() == 1);
  CHECK(k(0, 0).degree() == 0);
}

TEST_CASE("hermite_kernel of presentation maps has colength d") {
  Field f5 = Field::prime(5);
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t d = 1 + trial % 3;
    std::size_t r = 1 + (trial / 3) % 3;
    Matrix x = random_matrix(f5, d, d, rng);
    Matrix g = random_matrix(f5, d, r, rng);
    // [G | -(xI - X)] : k[x]^r + k[x]^d -> k[x]^d
    PolyMatrix pres = hstack(PolyMatrix::constant(g), PolyMatrix(f5, d, d));
    PolyMatrix ch = PolyMatrix::characteristic(x);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) pres(i, r + j) = -ch(i, j);
    PolyMatrix k = hermite_kernel(pres);
    CHECK((pres * k).is_zero());
    CHECK(kernel_stable(pres, k, static_cast<std::size_t>(pres.degree()) + 3));
    CHECK(k.cols() == r);
  }
}

TEST_CASE("polynomial determinant and colength") {
  PolyMatrix ch = PolyMatrix::characteristic(Matrix::from_rows(kQ, {{0, 1}, {0, 0}}));
  CHECK(determinant(ch) == px(kQ, {0, 0, 1}));
  CHECK(colength(ch) == 2);
}

TEST_CASE("gaussian_binomial examples") {
  CHECK(gaussian_binomial(1, 2, 2) == 3);
  for (unsigned d = 0; d <= 5; ++d) CHECK(gaussian_binomial(d, d, 3) == 1);
  CHECK(gaussian_binomial(2, 4, 2) == 35);
  CHECK_THROWS_AS(gaussian_binomial(3, 2, 2), DomainError);
}

TEST_CASE("gaussian_binomial equals exhaustive quotient count") {
  for (std::uint64_t q : {2u, 3u})
    for (unsigned r = 0; r <= 4; ++r)
      for (unsigned d = 0; d <= r; ++d) CHECK(gaussian_binomial(d, r, q) == count_rref_forms(d, r, q));
}

TEST_CASE("evaluate_param") {
  ParamMatrix fam(kQ, 2, 2);
  fam(1, 1) = Poly::variable(kQ);
  CHECK(evaluate_param(fam, Scalar(kQ, 0)).is_zero());
  CHECK(evaluate_param(fam, Scalar(kQ, 1)) == Matrix::from_rows(kQ, {{0, 0}, {0, 1}}));
  CHECK_THROWS_AS(evaluate_param(fam, Scalar(Field::prime(5), 1)), FieldMismatch);
}

TEST_CASE("tensor flattenings and transforms") {
  Tensor3 t(kQ, {2, 2, 2});
  t(0, 0, 0) = Scalar(kQ, 1);
  t(1, 1, 1) = Scalar(kQ, 1);
  for (std::size_t axis = 0; axis < 3; ++axis) CHECK(rank(t.flattening(axis)) == 2);
  Rng rng(5);
  Matrix g1 = random_invertible(kQ, 2, rng), g2 = random_invertible(kQ, 2, rng), g3 = random_invertible(kQ, 2, rng);
  Tensor3 s = t.transformed(g1, g2, g3);
  for (std::size_t axis = 0; axis < 3; ++axis) CHECK(rank(s.flattening(axis)) == 2);
  Tensor3 back = s.transformed(*inverse(g1), *inverse(g2), *inverse(g3));
  CHECK(back == t);
}
