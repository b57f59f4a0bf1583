#include "modspace/cases/cases.hpp"
#include "modspace/error.hpp"

namespace modspace::cases {

using exact::Poly;

namespace {

struct Entry {
  int i, j, k;
  long long constant, slope;  // constant + slope * t
};

ParamTensor build(Field f, std::initializer_list<Entry> entries) {
  ParamTensor t(f, {2, 2, 2});
  for (const auto& e : entries) t(e.i, e.j, e.k) = Poly(f, {Scalar(f, e.constant), Scalar(f, e.slope)});
  return t;
}

}  // namespace

std::vector<std::string> named_tensor_names() {
  return {"mu1", "mu2", "mu3", "mu4", "mu2_t", "mu3_t", "mu4_t", "pi5_sample"};
}

NamedTensor named_tensor(Field f, const std::string& name) {
  NamedTensor out;
  out.name = name;
  // index order (M1 dual, M2 dual, M3)
  if (name == "mu1") {
    out.value = build(f, {{0, 0, 0, 1, 0}, {1, 1, 1, 1, 0}});
  } else if (name == "mu2") {
    out.value = build(f, {{0, 0, 0, 1, 0}, {0, 1, 1, 1, 0}, {1, 0, 1, 1, 0}});
  } else if (name == "mu3") {
    out.value = build(f, {{0, 0, 0, 1, 0}, {0, 1, 1, 1, 0}});
  } else if (name == "mu4") {
    out.value = build(f, {{0, 0, 0, 1, 0}, {1, 0, 1, 1, 0}});
  } else if (name == "mu2_t") {
    out.value = build(f, {{0, 0, 0, 1, 0}, {0, 1, 1, 1, 0}, {1, 0, 1, 1, 0}, {1, 1, 1, 0, 1}});
    out.limit = "mu2";
  } else if (name == "mu3_t") {
    out.value = build(f, {{0, 0, 0, 1, 0}, {0, 1, 1, 1, 0}, {1, 1, 1, 0, 1}});
    out.limit = "mu3";
  } else if (name == "mu4_t") {
    out.value = build(f, {{0, 0, 0, 1, 0}, {1, 0, 1, 1, 0}, {1, 1, 1, 0, 1}});
    out.limit = "mu4";
  } else if (name == "pi5_sample") {
    // totally degenerate point with Pi = [[1,0,0,0],[0,1,0,0]]
    auto b = bilin::degenerate_point(2, 2, 2, exact::Matrix::identity(f, 2), exact::Matrix::identity(f, 2),
                                     exact::Matrix::from_rows(f, {{1, 0, 0, 0}, {0, 1, 0, 0}}));
    out.value = ParamTensor::constant(tensor::tensor_from_bilin(b));
  } else {
    throw DomainError("named_tensor: unknown name '" + name + "'");
  }
  out.parametric = !out.limit.empty();
  return out;
}

LimitReport verify_limit(const ParamTensor& family, const Tensor3& target, const std::vector<Scalar>& samples) {
  const Field f = family.field();
  LimitReport rep;
  const Tensor3 at_zero = exact::evaluate_param(family, Scalar(f, 0));
  rep.limit_matches = at_zero == target;
  rep.limit_class = tensor::classify_2x2x2(at_zero);
  rep.samples_concise_rank2 = rep.samples_identical = true;
  for (const auto& t : samples) {
    if (t.is_zero()) throw DomainError("verify_limit: sample parameters must be nonzero");
    Tensor3 value = exact::evaluate_param(family, t);
    auto cls = tensor::classify_2x2x2(value);
    rep.samples_concise_rank2 = rep.samples_concise_rank2 && cls.rank == 2 && cls.concise[0] && cls.concise[1] && cls.concise[2];
    rep.samples_identical = rep.samples_identical && value == at_zero;
    rep.samples.push_back({t, cls});
  }
  const auto& lc = rep.limit_class;
  rep.rank_drop = !samples.empty() && rep.samples_concise_rank2 &&
                  (lc.rank != 2 || !(lc.concise[0] && lc.concise[1] && lc.concise[2]));
  return rep;
}

}  // namespace modspace::cases
