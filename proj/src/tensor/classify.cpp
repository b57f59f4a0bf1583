#include <deque>

#include "modspace/error.hpp"
#include "modspace/exact/linalg.hpp"
#include "modspace/tensor/tensor.hpp"

namespace modspace::tensor {

Conciseness conciseness(const Tensor3& t) {
  Conciseness c;
  for (std::size_t axis = 0; axis < 3; ++axis) {
    c.flattening_ranks[axis] = t.size() == 0 ? 0 : exact::rank(t.flattening(axis));
    c.concise[axis] = c.flattening_ranks[axis] == t.dims()[axis];
  }
  return c;
}

Tensor3 tensor_from_bilin(const bilin::BilinPoint& b) {
  bilin::require_valid(b, "tensor_from_bilin");
  const std::size_t d1 = b.M1.d, d2 = b.M2.d;
  Tensor3 t(b.field(), {d1, d2, b.d3});
  for (std::size_t i = 0; i < d1; ++i)
    for (std::size_t j = 0; j < d2; ++j)
      for (std::size_t k = 0; k < b.d3; ++k) t(i, j, k) = b.Pihat(k, i * d2 + j);
  return t;
}

std::string to_string(Orbit222 o) {
  switch (o) {
    case Orbit222::zero: return "zero";
    case Orbit222::rank_one: return "rank-one";
    case Orbit222::non_concise_pair: return "non-concise-pair";
    case Orbit222::generic: return "generic";
    case Orbit222::w_type: return "W-type";
  }
  return "unknown";
}

std::string Classification222::label() const {
  std::string s = to_string(orbit);
  if (nonconcise_factor) s += "-" + std::to_string(*nonconcise_factor + 1);
  return s;
}

std::array<Scalar, 3> pencil_form(const Tensor3& t) {
  if (t.dims() != Tensor3::Dims{2, 2, 2}) throw ShapeError("pencil_form: requires a 2x2x2 tensor");
  Matrix a = t.slice3(0), b = t.slice3(1);
  Scalar da = exact::determinant(a), db = exact::determinant(b);
  return {da, exact::determinant(a + b) - da - db, db};
}

Scalar hyperdeterminant(const Tensor3& t) {
  if (t.dims() != Tensor3::Dims{2, 2, 2}) throw ShapeError("hyperdeterminant: requires a 2x2x2 tensor");
  auto a = [&](int i, int j, int k) { return t(i, j, k); };
  const Field f = t.field();
  Scalar det = a(0, 0, 0) * a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 1) + a(0, 0, 1) * a(0, 0, 1) * a(1, 1, 0) * a(1, 1, 0) +
               a(0, 1, 0) * a(0, 1, 0) * a(1, 0, 1) * a(1, 0, 1) + a(1, 0, 0) * a(1, 0, 0) * a(0, 1, 1) * a(0, 1, 1);
  Scalar mixed = a(0, 0, 0) * a(0, 0, 1) * a(1, 1, 0) * a(1, 1, 1) + a(0, 0, 0) * a(0, 1, 0) * a(1, 0, 1) * a(1, 1, 1) +
                 a(0, 0, 0) * a(1, 0, 0) * a(0, 1, 1) * a(1, 1, 1) + a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 1) * a(1, 1, 0) +
                 a(0, 0, 1) * a(1, 0, 0) * a(0, 1, 1) * a(1, 1, 0) + a(0, 1, 0) * a(1, 0, 0) * a(0, 1, 1) * a(1, 0, 1);
  Scalar quartic = a(0, 0, 0) * a(0, 1, 1) * a(1, 0, 1) * a(1, 1, 0) + a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 0) * a(1, 1, 1);
  return det - Scalar(f, 2) * mixed + Scalar(f, 4) * quartic;
}

Classification222 classify_2x2x2(const Tensor3& t, bool check) {
  if (t.dims() != Tensor3::Dims{2, 2, 2}) throw ShapeError("classify_2x2x2: requires a 2x2x2 tensor");
  Conciseness c = conciseness(t);
  Classification222 out;
  out.concise = c.concise;
  const auto& fr = c.flattening_ranks;
  std::size_t ones = 0;
  for (auto r : fr) ones += (r == 1);
  if (fr[0] == 0) {
    out.orbit = Orbit222::zero;
  } else if (ones == 3) {
    out.orbit = Orbit222::rank_one;
    out.rank = out.border_rank = 1;
  } else if (ones == 1) {
    out.orbit = Orbit222::non_concise_pair;
    out.rank = out.border_rank = 2;
    for (std::size_t k = 0; k < 3; ++k)
      if (fr[k] == 1) out.nonconcise_factor = k;
  } else if (ones == 0) {
    auto [a, b, cc] = pencil_form(t);
    const Field f = t.field();
    bool separable;
    if (f.characteristic() == 2) {
      separable = !b.is_zero();
    } else {
      Scalar disc = b * b - Scalar(f, 4) * a * cc;
      separable = !disc.is_zero();
      if (check && !(disc == hyperdeterminant(t)))
        throw InternalError("classify_2x2x2: pencil discriminant disagrees with the hyperdeterminant");
    }
    out.orbit = separable ? Orbit222::generic : Orbit222::w_type;
    out.rank = separable ? 2 : 3;
    out.border_rank = 2;
  } else {
    throw InternalError("classify_2x2x2: impossible flattening ranks");
  }
  if (check && out.orbit != Orbit222::generic && out.orbit != Orbit222::w_type && t.field().characteristic() != 2 &&
      !hyperdeterminant(t).is_zero())
    throw InternalError("classify_2x2x2: degenerate tensor with nonzero hyperdeterminant");
  return out;
}

Tensor3 unit_tensor(Field f, std::size_t d) {
  Tensor3 t(f, {d, d, d});
  for (std::size_t i = 0; i < d; ++i) t(i, i, i) = Scalar(f, 1);
  return t;
}

Tensor3 multiplication_tensor(const modcore::FramedModule& m, std::size_t generator) {
  modcore::check_shapes(m);
  if (generator >= m.r) throw DomainError("multiplication_tensor: generator index out of range");
  const Field f = m.field();
  const std::size_t d = m.d;
  // words w_k(X) such that w_k(X) v is a basis
  exact::Span span(f, d);
  std::vector<Matrix> words;
  std::deque<Matrix> queue{Matrix::identity(f, d)};
  const Vector v = m.G.column(generator);
  while (!queue.empty()) {
    Matrix w = std::move(queue.front());
    queue.pop_front();
    if (!span.add(w * v)) continue;
    for (const auto& x : m.X) queue.push_back(x * w);
    words.push_back(std::move(w));
  }
  if (words.size() != d) throw DomainError("multiplication_tensor: module is not cyclic on this generator");
  Matrix basis(f, d, d);
  for (std::size_t k = 0; k < d; ++k) basis.set_block(0, k, Matrix::column_vector(words[k] * v));
  const Matrix inv = *exact::inverse(basis);
  Tensor3 t(f, {d, d, d});
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      Vector coords = inv * (words[a] * words[b] * v);
      for (std::size_t k = 0; k < d; ++k) t(a, b, k) = coords[k];
    }
  return t;
}

}  // namespace modspace::tensor
