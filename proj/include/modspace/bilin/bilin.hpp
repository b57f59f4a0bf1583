#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "modspace/modcore/framed_module.hpp"
#include "modspace/quot/quot.hpp"

namespace modspace::bilin {

using exact::Field;
using exact::Matrix;
using exact::Scalar;
using exact::Vector;
using modcore::FramedModule;

/// Two framed modules with a surjection pi: M1 (x)_S M2 -> M3, stored as its lift
/// Pihat: k^{d1} (x) k^{d2} -> k^{d3} together with the action Z_i on M3.
struct BilinPoint {
  FramedModule M1;
  FramedModule M2;
  std::size_t d3 = 0;
  std::vector<Matrix> Z;
  Matrix Pihat;  // d3 x (d1 d2), column a*d2 + b is the image of e_a (x) e_b

  Field field() const noexcept { return Pihat.field(); }
  std::size_t n() const noexcept { return M1.n; }
};

bool operator==(const BilinPoint& a, const BilinPoint& b);

struct BilinValidation {
  bool modules_valid = true;
  std::string module_message;
  bool z_commuting = true;
  bool equivariant = true;
  bool surjective = true;
  // first equivariance failure: index i, side (1: X_i (x) 1, 2: 1 (x) Y_i), residual
  std::optional<std::size_t> failing_index;
  int failing_side = 0;
  Matrix residual;
  bool valid() const noexcept { return modules_valid && z_commuting && equivariant && surjective; }
  std::string message() const;
};

/// Throws ShapeError on inconsistent shapes.
void check_shapes(const BilinPoint& b);
BilinValidation validate_bilin(const BilinPoint& b);
void require_valid(const BilinPoint& b, const std::string& what = "point");

/// Framing of M3 induced by the lift: column a*r2 + b is Pihat (g_a (x) h_b).
Matrix induced_framing(const BilinPoint& b);
/// M3 with the induced framing (r = r1 r2).
FramedModule target_module(const BilinPoint& b);

/// Solves Pihat (g_a (x) h_b) = column a*r2+b of M3's framing together with both
/// equivariance families. Returns the point, or nullopt when the framing does not
/// factor through M1 (x)_S M2.
std::optional<BilinPoint> factor_membership(const FramedModule& m1, const FramedModule& m2,
                                            const FramedModule& m3);

/// Dimension of the solution space of the membership system in the Pihat unknowns
/// (0 when the solution is unique); nullopt when inconsistent.
std::optional<std::size_t> membership_solution_dim(const FramedModule& m1, const FramedModule& m2,
                                                   const FramedModule& m3);

struct BilinTangentVector {
  std::vector<Matrix> Xdot;
  Matrix Gdot;
  std::vector<Matrix> Ydot;
  Matrix Hdot;
  std::vector<Matrix> Zdot;
  Matrix Pihatdot;
};

struct BilinTangent {
  std::size_t dim = 0;
  std::size_t nullity = 0;
  std::size_t gauge = 0;  // d1^2 + d2^2 + d3^2
  std::vector<BilinTangentVector> basis;  // representatives modulo the gauge subspace
};

BilinTangent bilin_tangent(const BilinPoint& b, bool check = false);
bool satisfies_first_order(const BilinPoint& b, const BilinTangentVector& v);
BilinTangentVector gauge_vector(const BilinPoint& b, const Matrix& d1, const Matrix& d2, const Matrix& d3);
Vector flatten(const BilinTangentVector& v);
BilinTangentVector unflatten(const BilinPoint& b, const Vector& v);

/// (g1, g2, g3) acting on (X, G), (Y, H), (Z, Pihat).
BilinPoint gauge_transform(const BilinPoint& b, const Matrix& g1, const Matrix& g2, const Matrix& g3);

/// Maps K_i -> M_i given by the images of the generators of each kernel (n = 1).
struct HomTriple {
  Matrix phi1;  // d1 x m1
  Matrix phi2;  // d2 x m2
  Matrix phi3;  // d3 x m3
};

struct HomTripleContext {
  quot::KernelPresentation K1, K2, K3;
  FramedModule M3;  // target with induced framing
};
HomTripleContext hom_triple_context(const BilinPoint& b);

struct HomTripleResidual {
  bool homs = true;          // each phi_i respects the syzygies of K_i
  bool compatible = true;    // both compatibility families hold
  std::size_t failures = 0;  // number of violated generator equations
  bool ok() const noexcept { return homs && compatible; }
};

/// phi3(k1 (x) e_b) = Pihat(phi1(k1) (x) h_b) and phi3(e_a (x) k2) = Pihat(g_a (x) phi2(k2)),
/// checked on generators of K1 (x) F2 and F1 (x) K2.
HomTripleResidual hom_triple_check(const BilinPoint& b, const HomTripleContext& ctx, const HomTriple& t);
HomTriple tangent_to_triple(const BilinPoint& b, const HomTripleContext& ctx, const BilinTangentVector& v);
/// Dimension of the space of compatible triples (phi1, phi2, phi3).
std::size_t hom_triple_space_dim(const BilinPoint& b, const HomTripleContext& ctx);

/// M1 = M2 = M3 the coordinate ring of the points with framings G1, G2, and
/// Pihat the componentwise product in the diagonal basis.
BilinPoint main_component_point(const std::vector<Vector>& points, const Matrix& G1, const Matrix& G2);
/// All actions zero, Pihat = Pi.
BilinPoint degenerate_point(std::size_t d, std::size_t r1, std::size_t r2, const Matrix& A1, const Matrix& A2,
                            const Matrix& Pi, std::size_t n = 1);

struct DimensionReport {
  std::size_t n = 0, d = 0, r1 = 0, r2 = 0;
  std::size_t main_dim = 0;
  std::optional<std::size_t> degenerate_dim;  // r1, r2 >= d
  bool reducible_by_count = false;
  bool reducible_by_secant = false;
  bool irreducible = false;
  std::string reason;
};
DimensionReport bilin_dims(std::size_t n, std::size_t d, std::size_t r1, std::size_t r2);

}  // namespace modspace::bilin
