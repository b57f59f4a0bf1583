#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modspace/exact/matrix.hpp"
#include "modspace/exact/poly.hpp"
#include "modspace/exact/random.hpp"

namespace modspace::modcore {

using exact::Field;
using exact::Matrix;
using exact::Scalar;
using exact::Vector;

/// A quotient S^r -> M with dim M = d, given by the action of x_1..x_n on M
/// and the images of the framing generators as the columns of G.
struct FramedModule {
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t r = 0;
  std::vector<Matrix> X;
  Matrix G;

  Field field() const noexcept { return G.field(); }
};

struct FramedValidation {
  bool commuting = true;
  bool generating = true;
  std::optional<std::pair<std::size_t, std::size_t>> noncommuting_pair;
  Matrix commutator;                 // X_i X_j - X_j X_i for the reported pair
  std::optional<Matrix> invariant_subspace;  // proper X-stable subspace containing G (columns)
  bool valid() const noexcept { return commuting && generating; }
  std::string message() const;
};

/// Throws ShapeError when the matrices do not have the declared shapes.
void check_shapes(const FramedModule& m);
FramedValidation validate_framed(const FramedModule& m);
/// Throws DomainError describing the first violated invariant.
void require_valid(const FramedModule& m, const std::string& what = "module");

/// Columns spanning the smallest subspace containing `start` and stable under every X_i.
Matrix krylov_closure(const std::vector<Matrix>& X, const Matrix& start);

struct TensorProductResult {
  std::size_t dim12 = 0;
  Matrix q;                    // dim12 x d1*d2, full row rank, kills every Im(X_i (x) 1 - 1 (x) Y_i)
  std::vector<Matrix> action;  // induced x_i on the quotient: q (X_i (x) 1) = action_i q
};

/// M1 (x)_S M2 as a quotient of k^{d1} (x) k^{d2}; index a*d2 + b for e_a (x) e_b.
TensorProductResult tensor_over_S(const FramedModule& m1, const FramedModule& m2);

/// Dimension of the unital algebra generated by X_1..X_n.
std::size_t annihilator_algebra_dim(const FramedModule& m);

exact::Poly char_poly(const Matrix& a);

struct Support {
  std::vector<exact::Root> points;
  bool split = false;
};

/// Eigenvalues of X in the field with multiplicities (n = 1 only).
Support support_univariate(const FramedModule& m);

/// Diagonal action at distinct points of k^n (each point has n coordinates).
FramedModule make_tuple_of_points(const std::vector<Vector>& points, const Matrix& G);
/// r = 1 with G all ones: the coordinate ring of the points.
FramedModule make_cyclic_tuple_of_points(const std::vector<Vector>& points);
/// (S/m)^d at the origin framed by A; n variables acting by zero.
FramedModule make_degenerate(std::size_t d, std::size_t r, const Matrix& A, std::size_t n = 1);
/// The module S/(f) for f monic of degree d (companion matrix, generator 1).
FramedModule make_cyclic(const exact::Poly& f);

/// Random valid module: X_1 random, the other X_i random polynomials in X_1,
/// G random; resampled until G generates.
FramedModule random_framed(Field f, std::size_t n, std::size_t d, std::size_t r, exact::Rng& rng);

/// (g X_i g^-1, g G)
FramedModule gauge_transform(const FramedModule& m, const Matrix& g);

/// Basis of M made of words in the X_i applied to generators, chosen greedily
/// in breadth-first order. It depends only on ker(S^r -> M).
Matrix word_basis(const FramedModule& m);

/// Representative of the kernel class: (B^-1 X_i B, B^-1 G) for B = word_basis.
FramedModule canonical_form(const FramedModule& m);
bool same_kernel(const FramedModule& a, const FramedModule& b);

bool operator==(const FramedModule& a, const FramedModule& b);

}  // namespace modspace::modcore
