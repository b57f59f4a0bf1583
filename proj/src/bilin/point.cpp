#include <sstream>

#include "modspace/bilin/bilin.hpp"
#include "modspace/error.hpp"
#include "modspace/exact/linalg.hpp"

namespace modspace::bilin {

bool operator==(const BilinPoint& a, const BilinPoint& b) {
  return a.M1 == b.M1 && a.M2 == b.M2 && a.d3 == b.d3 && a.Z == b.Z && a.Pihat == b.Pihat;
}

std::string BilinValidation::message() const {
  if (valid()) return "valid";
  std::ostringstream os;
  const char* sep = "";
  if (!modules_valid) {
    os << module_message;
    sep = "; ";
  }
  if (!z_commuting) {
    os << sep << "Z matrices do not commute";
    sep = "; ";
  }
  if (!equivariant && failing_index) {
    os << sep << "equivariance fails for " << (failing_side == 1 ? "X_" : "Y_") << *failing_index + 1
       << ": residual " << residual.to_string();
    sep = "; ";
  }
  if (!surjective) os << sep << "Pihat does not have full row rank";
  return os.str();
}

void check_shapes(const BilinPoint& b) {
  modcore::check_shapes(b.M1);
  modcore::check_shapes(b.M2);
  if (b.M1.n != b.M2.n) throw ShapeError("M1 and M2 have different variable counts");
  if (!(b.M1.field() == b.M2.field()) || !(b.M1.field() == b.Pihat.field()))
    throw FieldMismatch("point mixes fields");
  if (b.Z.size() != b.M1.n) throw ShapeError("expected n target action matrices");
  for (const auto& z : b.Z) {
    if (z.rows() != b.d3 || z.cols() != b.d3) throw ShapeError("target action matrix is not d3 x d3");
    if (!(z.field() == b.field())) throw FieldMismatch("target action over a different field");
  }
  if (b.Pihat.rows() != b.d3 || b.Pihat.cols() != b.M1.d * b.M2.d)
    throw ShapeError("Pihat must be d3 x (d1 d2)");
}

BilinValidation validate_bilin(const BilinPoint& b) {
  check_shapes(b);
  BilinValidation rep;
  auto v1 = modcore::validate_framed(b.M1);
  auto v2 = modcore::validate_framed(b.M2);
  if (!v1.valid() || !v2.valid()) {
    rep.modules_valid = false;
    rep.module_message = !v1.valid() ? "M1: " + v1.message() : "M2: " + v2.message();
  }
  const Field f = b.field();
  for (std::size_t i = 0; i < b.Z.size() && rep.z_commuting; ++i)
    for (std::size_t j = i + 1; j < b.Z.size(); ++j)
      if (!exact::commutator(b.Z[i], b.Z[j]).is_zero()) rep.z_commuting = false;
  const Matrix i1 = Matrix::identity(f, b.M1.d), i2 = Matrix::identity(f, b.M2.d);
  for (std::size_t i = 0; i < b.Z.size() && rep.equivariant; ++i) {
    Matrix r1 = b.Pihat * exact::kron(b.M1.X[i], i2) - b.Z[i] * b.Pihat;
    Matrix r2 = b.Pihat * exact::kron(i1, b.M2.X[i]) - b.Z[i] * b.Pihat;
    if (!r1.is_zero() || !r2.is_zero()) {
      rep.equivariant = false;
      rep.failing_index = i;
      rep.failing_side = r1.is_zero() ? 2 : 1;
      rep.residual = r1.is_zero() ? r2 : r1;
    }
  }
  rep.surjective = exact::rank(b.Pihat) == b.d3;
  return rep;
}

void require_valid(const BilinPoint& b, const std::string& what) {
  auto v = validate_bilin(b);
  if (!v.valid()) throw DomainError(what + ": " + v.message());
}

Matrix induced_framing(const BilinPoint& b) { return b.Pihat * exact::kron(b.M1.G, b.M2.G); }

FramedModule target_module(const BilinPoint& b) {
  return FramedModule{b.M1.n, b.d3, b.M1.r * b.M2.r, b.Z, induced_framing(b)};
}

BilinPoint gauge_transform(const BilinPoint& b, const Matrix& g1, const Matrix& g2, const Matrix& g3) {
  check_shapes(b);
  auto i1 = exact::inverse(g1), i2 = exact::inverse(g2), i3 = exact::inverse(g3);
  if (!i1 || !i2 || !i3 || g3.rows() != b.d3) throw DomainError("gauge_transform: singular or misshaped change of basis");
  BilinPoint out{modcore::gauge_transform(b.M1, g1), modcore::gauge_transform(b.M2, g2), b.d3, {},
                 g3 * b.Pihat * exact::kron(*i1, *i2)};
  for (const auto& z : b.Z) out.Z.push_back(g3 * z * *i3);
  return out;
}

BilinPoint main_component_point(const std::vector<Vector>& points, const Matrix& G1, const Matrix& G2) {
  FramedModule m1 = modcore::make_tuple_of_points(points, G1);
  FramedModule m2 = modcore::make_tuple_of_points(points, G2);
  const std::size_t d = points.size();
  const Field f = m1.field();
  // idempotent basis: e_a e_b = delta_ab e_a
  Matrix pi(f, d, d * d);
  for (std::size_t a = 0; a < d; ++a) pi(a, a * d + a) = Scalar(f, 1);
  BilinPoint out{m1, m2, d, m1.X, pi};
  require_valid(out, "main_component_point");
  return out;
}

BilinPoint degenerate_point(std::size_t d, std::size_t r1, std::size_t r2, const Matrix& A1, const Matrix& A2,
                            const Matrix& Pi, std::size_t n) {
  if (Pi.rows() != d || Pi.cols() != d * d) throw ShapeError("degenerate_point: Pi must be d x d^2");
  if (exact::rank(Pi) != d) throw DomainError("degenerate_point: Pi does not have rank d");
  FramedModule m1 = modcore::make_degenerate(d, r1, A1, n);
  FramedModule m2 = modcore::make_degenerate(d, r2, A2, n);
  return BilinPoint{m1, m2, d, std::vector<Matrix>(n, Matrix(Pi.field(), d, d)), Pi};
}

}  // namespace modspace::bilin
