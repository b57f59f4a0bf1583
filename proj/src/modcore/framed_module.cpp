#include "modspace/modcore/framed_module.hpp"

#include <deque>
#include <sstream>

#include "modspace/error.hpp"
#include "modspace/exact/linalg.hpp"
#include "modspace/exact/poly_linalg.hpp"
#include "modspace/exact/poly_matrix.hpp"

namespace modspace::modcore {

using exact::Span;

std::string FramedValidation::message() const {
  std::ostringstream os;
  if (valid()) return "valid";
  if (!commuting && noncommuting_pair)
    os << "X_" << noncommuting_pair->first + 1 << " and X_" << noncommuting_pair->second + 1
       << " do not commute";
  if (!generating) {
    if (!commuting) os << "; ";
    os << "G does not generate: invariant subspace of dimension "
       << (invariant_subspace ? invariant_subspace->cols() : 0);
  }
  return os.str();
}

void check_shapes(const FramedModule& m) {
  if (m.X.size() != m.n) throw ShapeError("expected " + std::to_string(m.n) + " action matrices");
  for (const auto& x : m.X) {
    if (x.rows() != m.d || x.cols() != m.d) throw ShapeError("action matrix is not d x d");
    if (!(x.field() == m.field())) throw FieldMismatch("action matrix over a different field");
    x.require_uniform_field();
  }
  if (m.G.rows() != m.d || m.G.cols() != m.r) throw ShapeError("framing matrix is not d x r");
  m.G.require_uniform_field();
}

Matrix krylov_closure(const std::vector<Matrix>& X, const Matrix& start) {
  Span span(start.field(), start.rows());
  std::deque<Vector> queue;
  for (std::size_t j = 0; j < start.cols(); ++j) queue.push_back(start.column(j));
  // each accepted vector raises the dimension, so at most d rounds of products
  while (!queue.empty()) {
    Vector v = std::move(queue.front());
    queue.pop_front();
    if (!span.add(v)) continue;
    for (const auto& x : X) queue.push_back(x * v);
  }
  return span.basis_matrix();
}

FramedValidation validate_framed(const FramedModule& m) {
  check_shapes(m);
  FramedValidation report;
  for (std::size_t i = 0; i < m.n && report.commuting; ++i)
    for (std::size_t j = i + 1; j < m.n; ++j) {
      Matrix c = exact::commutator(m.X[i], m.X[j]);
      if (!c.is_zero()) {
        report.commuting = false;
        report.noncommuting_pair = {i, j};
        report.commutator = c;
        break;
      }
    }
  Matrix closure = krylov_closure(m.X, m.G);
  if (closure.cols() < m.d) {
    report.generating = false;
    report.invariant_subspace = closure;
  }
  return report;
}

void require_valid(const FramedModule& m, const std::string& what) {
  FramedValidation v = validate_framed(m);
  if (!v.valid()) throw DomainError(what + ": " + v.message());
}

TensorProductResult tensor_over_S(const FramedModule& m1, const FramedModule& m2) {
  if (m1.n != m2.n) throw DomainError("tensor_over_S: variable counts differ");
  if (!(m1.field() == m2.field())) throw FieldMismatch("tensor_over_S: fields differ");
  check_shapes(m1);
  check_shapes(m2);
  const Field f = m1.field();
  const std::size_t N = m1.d * m2.d;
  const Matrix i1 = Matrix::identity(f, m1.d), i2 = Matrix::identity(f, m2.d);
  std::vector<Matrix> left, right;
  Matrix relations(f, N, 0);
  for (std::size_t i = 0; i < m1.n; ++i) {
    left.push_back(exact::kron(m1.X[i], i2));
    right.push_back(exact::kron(i1, m2.X[i]));
    relations = exact::hstack(relations, left.back() - right.back());
  }
  TensorProductResult out;
  // rows of q: functionals vanishing on the relation span
  out.q = exact::kernel_matrix(relations.transpose()).transpose();
  if (out.q.rows() == 0) out.q = Matrix(f, 0, N);
  out.dim12 = out.q.rows();
  if (out.dim12 == 0) {
    out.action.assign(m1.n, Matrix(f, 0, 0));
    return out;
  }
  auto section = exact::solve(out.q, Matrix::identity(f, out.dim12));
  if (!section) throw InternalError("tensor_over_S: quotient map not surjective");
  for (std::size_t i = 0; i < m1.n; ++i) {
    Matrix a = out.q * left[i] * *section;
    if (!(a * out.q == out.q * left[i]) || !(a * out.q == out.q * right[i]))
      throw InternalError("tensor_over_S: induced action inconsistent");
    out.action.push_back(std::move(a));
  }
  return out;
}

std::size_t annihilator_algebra_dim(const FramedModule& m) {
  check_shapes(m);
  const Field f = m.field();
  Span span(f, m.d * m.d);
  std::deque<Matrix> queue{Matrix::identity(f, m.d)};
  while (!queue.empty()) {
    Matrix a = std::move(queue.front());
    queue.pop_front();
    if (!span.add(exact::vec(a))) continue;
    for (const auto& x : m.X) queue.push_back(x * a);
  }
  return span.dim();
}

exact::Poly char_poly(const Matrix& a) {
  if (!a.is_square()) throw ShapeError("char_poly: matrix not square");
  if (a.rows() == 0) return exact::Poly(Scalar(a.field(), 1));
  return exact::determinant(exact::PolyMatrix::characteristic(a));
}

FramedModule make_tuple_of_points(const std::vector<Vector>& points, const Matrix& G) {
  if (points.empty()) throw DomainError("make_tuple_of_points: no points");
  const std::size_t d = points.size();
  const std::size_t n = points.front().size();
  for (std::size_t a = 0; a < d; ++a) {
    if (points[a].size() != n) throw ShapeError("make_tuple_of_points: points of different lengths");
    for (std::size_t b = 0; b < a; ++b)
      if (points[a] == points[b]) throw DomainError("make_tuple_of_points: duplicate point");
  }
  if (G.rows() != d) throw ShapeError("make_tuple_of_points: G must have one row per point");
  FramedModule m{n, d, G.cols(), {}, G};
  for (std::size_t i = 0; i < n; ++i) {
    Vector diag;
    for (const auto& p : points) diag.push_back(p[i]);
    m.X.push_back(Matrix::diagonal(diag));
  }
  require_valid(m, "make_tuple_of_points");
  return m;
}

FramedModule make_cyclic_tuple_of_points(const std::vector<Vector>& points) {
  if (points.empty() || points.front().empty()) throw DomainError("make_cyclic_tuple_of_points: no points");
  const Field f = points.front().front().field();
  Matrix g(f, points.size(), 1);
  for (std::size_t a = 0; a < points.size(); ++a) g(a, 0) = Scalar(f, 1);
  return make_tuple_of_points(points, g);
}

FramedModule make_degenerate(std::size_t d, std::size_t r, const Matrix& A, std::size_t n) {
  if (A.rows() != d || A.cols() != r) throw ShapeError("make_degenerate: A must be d x r");
  if (exact::rank(A) != d) throw DomainError("make_degenerate: A does not have rank d");
  FramedModule m{n, d, r, std::vector<Matrix>(n, Matrix(A.field(), d, d)), A};
  return m;
}

FramedModule make_cyclic(const exact::Poly& f) {
  if (f.degree() < 1) throw DomainError("make_cyclic: degree must be positive");
  const exact::Poly g = f.monic();
  const std::size_t d = static_cast<std::size_t>(g.degree());
  const Field fl = g.field();
  Matrix x(fl, d, d);
  for (std::size_t k = 0; k + 1 < d; ++k) x(k + 1, k) = Scalar(fl, 1);
  for (std::size_t k = 0; k < d; ++k) x(k, d - 1) = -g.coeff(k);
  Matrix gen(fl, d, 1);
  gen(0, 0) = Scalar(fl, 1);
  return FramedModule{1, d, 1, {x}, gen};
}

FramedModule random_framed(Field f, std::size_t n, std::size_t d, std::size_t r, exact::Rng& rng) {
  if (n == 0 || d == 0 || r == 0) throw DomainError("random_framed: n, d, r must be positive");
  for (int attempt = 0; attempt < 10000; ++attempt) {
    FramedModule m{n, d, r, {}, exact::random_matrix(f, d, r, rng)};
    m.X.push_back(exact::random_matrix(f, d, d, rng));
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Scalar> c;
      for (std::size_t k = 0; k < d; ++k) c.push_back(exact::random_scalar(f, rng));
      m.X.push_back(exact::Poly(f, c).eval(m.X[0]));
    }
    if (validate_framed(m).valid()) return m;
  }
  throw InternalError("random_framed: no generating sample found");
}

FramedModule gauge_transform(const FramedModule& m, const Matrix& g) {
  check_shapes(m);
  auto inv = exact::inverse(g);
  if (!inv || g.rows() != m.d) throw DomainError("gauge_transform: g must be invertible d x d");
  FramedModule out{m.n, m.d, m.r, {}, g * m.G};
  for (const auto& x : m.X) out.X.push_back(g * x * *inv);
  return out;
}

Matrix word_basis(const FramedModule& m) {
  check_shapes(m);
  Span span(m.field(), m.d);
  std::deque<Vector> queue;
  for (std::size_t a = 0; a < m.r; ++a) queue.push_back(m.G.column(a));
  while (!queue.empty()) {
    Vector v = std::move(queue.front());
    queue.pop_front();
    if (!span.add(v)) continue;
    for (const auto& x : m.X) queue.push_back(x * v);
  }
  return Matrix::from_columns(m.field(), m.d, span.inserted());
}

FramedModule canonical_form(const FramedModule& m) {
  Matrix b = word_basis(m);
  if (b.cols() != m.d) throw DomainError("canonical_form: framing does not generate");
  auto binv = exact::inverse(b);
  FramedModule out{m.n, m.d, m.r, {}, *binv * m.G};
  for (const auto& x : m.X) out.X.push_back(*binv * x * b);
  return out;
}

bool same_kernel(const FramedModule& a, const FramedModule& b) {
  if (a.n != b.n || a.d != b.d || a.r != b.r) return false;
  return canonical_form(a) == canonical_form(b);
}

bool operator==(const FramedModule& a, const FramedModule& b) {
  return a.n == b.n && a.d == b.d && a.r == b.r && a.X == b.X && a.G == b.G;
}

}  // namespace modspace::modcore
