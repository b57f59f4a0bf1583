#include "modspace/exact/param.hpp"

#include "modspace/error.hpp"

namespace modspace::exact {

ParamTensor::ParamTensor(Field f, Tensor3::Dims dims)
    : field_(f), dims_(dims), data_(dims[0] * dims[1] * dims[2], Poly(f)) {}

ParamTensor ParamTensor::constant(const Tensor3& t) {
  ParamTensor p(t.field(), t.dims());
  for (std::size_t idx = 0; idx < t.size(); ++idx) p.data_[idx] = Poly(t.coeffs()[idx]);
  return p;
}

Matrix evaluate_param(const ParamMatrix& family, const Scalar& t0) {
  if (!(family.field() == t0.field())) throw FieldMismatch("evaluation point over wrong field");
  return family.eval(t0);
}

Tensor3 evaluate_param(const ParamTensor& family, const Scalar& t0) {
  if (!(family.field() == t0.field())) throw FieldMismatch("evaluation point over wrong field");
  Tensor3 out(family.field(), family.dims());
  for (std::size_t idx = 0; idx < family.coeffs().size(); ++idx)
    out.coeffs()[idx] = family.coeffs()[idx].eval(t0);
  return out;
}

}  // namespace modspace::exact
