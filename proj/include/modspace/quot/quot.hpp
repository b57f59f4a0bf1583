#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modspace/exact/param.hpp"
#include "modspace/exact/poly_matrix.hpp"
#include "modspace/modcore/framed_module.hpp"

namespace modspace::quot {

using exact::Field;
using exact::Matrix;
using exact::PolyMatrix;
using exact::Scalar;
using exact::Vector;
using modcore::FramedModule;

struct QuotTangentVector {
  std::vector<Matrix> Xdot;
  Matrix Gdot;
};

struct QuotTangent {
  std::size_t dim = 0;
  std::size_t nullity = 0;
  std::size_t gauge = 0;  // d^2
  std::vector<QuotTangentVector> basis;  // representatives modulo the gauge subspace
};

/// First-order deformations of (X, G) modulo infinitesimal basis changes.
/// With `check`, the rank of the gauge map is computed and must equal d^2.
QuotTangent quot_tangent(const FramedModule& p, bool check = false);

/// Xdot_i X_j + X_i Xdot_j = Xdot_j X_i + X_j Xdot_i for all i < j.
bool satisfies_first_order(const FramedModule& p, const QuotTangentVector& v);
/// ([D, X_i], D G)
QuotTangentVector gauge_vector(const FramedModule& p, const Matrix& delta);

/// Layout used by the solver: vec(Xdot_1), ..., vec(Xdot_n), vec(Gdot).
Vector flatten(const QuotTangentVector& v);
QuotTangentVector unflatten(const FramedModule& p, const Vector& v);

/// Generators of K = ker(k[x]^r -> M) as columns (n = 1).
struct KernelPresentation {
  PolyMatrix generators;  // r x m
};
KernelPresentation kernel_presentation(const FramedModule& p);

/// Image in M of an element f of k[x]^r: sum_a f_a(X) g_a.
Vector evaluate_in_module(const FramedModule& p, const std::vector<exact::Poly>& f);

struct HomKM {
  std::size_t dim = 0;
  KernelPresentation kernel;
  std::vector<Matrix> basis;  // d x m: column j is the image of generator j
};

/// Hom_S(K, M) for n = 1, solved on the generators of K subject to their syzygies.
HomKM hom_KM_univariate(const FramedModule& p);

/// True if the assignment of images to the generators of K respects every syzygy.
bool is_hom_on_generators(const FramedModule& p, const KernelPresentation& k, const Matrix& images);

/// The map K -> M induced by a first-order deformation:
/// k = (f_a) |-> sum_a Df_a(X)[Xdot] g_a + f_a(X) gdot_a.
Matrix tangent_to_hom(const FramedModule& p, const KernelPresentation& k, const QuotTangentVector& v);

struct QuotDims {
  std::size_t principal_dim = 0;
  std::optional<std::size_t> degenerate_dim;  // defined for r >= d
  bool reducible_by_count = false;
};
QuotDims quot_dims(std::size_t n, std::size_t d, std::size_t r);

struct GrassmannianReport {
  std::uint64_t enumerated = 0;  // points of the degenerate locus found by enumeration
  std::uint64_t expected = 0;    // Gaussian binomial
  std::uint64_t matrices_scanned = 0;
  bool match() const noexcept { return enumerated == expected; }
};

/// Enumerates every rank-d matrix in F_q^{d x r}, identifies framings with equal kernels,
/// and compares the class count with the Gaussian binomial. Throws CapExceeded if
/// q^{dr} > cap.
GrassmannianReport degenerate_grassmannian_check(std::size_t d, std::size_t r, std::uint64_t q,
                                                 std::uint64_t cap = 1u << 22);

enum class LimitBranch { distinct_support, scalar_action, square_zero };
std::string to_string(LimitBranch b);

/// Family (X(t), G(t)) of modules with dim 2 whose value at t = 0 is the given point.
struct QuotFamily {
  std::size_t n = 0;
  std::size_t r = 0;
  LimitBranch branch = LimitBranch::distinct_support;
  std::vector<exact::ParamMatrix> X;
  exact::ParamMatrix G;
};

/// Throws DomainError if d != 2 or the support does not split over the field.
QuotFamily quot2_limit_family(const FramedModule& p);
FramedModule evaluate_family(const QuotFamily& family, const Scalar& t0);

/// Number of distinct points in the support of a d = 2 module for any n, or nullopt if
/// some action matrix has an irreducible characteristic polynomial.
std::optional<std::size_t> support_size_d2(const FramedModule& p);

}  // namespace modspace::quot
