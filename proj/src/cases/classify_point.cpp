#include "modspace/cases/cases.hpp"
#include "modspace/error.hpp"

namespace modspace::cases {

std::string to_string(ModuleType2 t) {
  switch (t) {
    case ModuleType2::split: return "split";
    case ModuleType2::cyclic_double: return "cyclic-double";
    case ModuleType2::scalar: return "scalar";
    case ModuleType2::nonsplit: return "nonsplit";
  }
  return "unknown";
}

std::string to_string(CaseLabel l) {
  switch (l) {
    case CaseLabel::main_split: return "MAIN_SPLIT";
    case CaseLabel::cyclic_nilpotent: return "CYCLIC_NILPOTENT";
    case CaseLabel::mixed_12: return "MIXED_12";
    case CaseLabel::mixed_21: return "MIXED_21";
    case CaseLabel::totally_degenerate: return "TOTALLY_DEGENERATE";
    case CaseLabel::split_degenerate_12: return "SPLIT_DEGENERATE_12";
    case CaseLabel::split_degenerate_21: return "SPLIT_DEGENERATE_21";
  }
  return "UNKNOWN";
}

std::vector<CaseLabel> all_case_labels() {
  return {CaseLabel::main_split,         CaseLabel::cyclic_nilpotent,    CaseLabel::mixed_12,
          CaseLabel::mixed_21,           CaseLabel::totally_degenerate,  CaseLabel::split_degenerate_12,
          CaseLabel::split_degenerate_21};
}

ModuleInfo2 module_type_2(const modcore::FramedModule& m) {
  if (m.n != 1 || m.d != 2) throw DomainError("module_type_2: requires n = 1 and d = 2");
  ModuleInfo2 info;
  info.char_poly = modcore::char_poly(m.X[0]);
  info.algebra_dim = modcore::annihilator_algebra_dim(m);
  auto roots = exact::roots_in_field(info.char_poly);
  if (!roots.split)
    info.type = ModuleType2::nonsplit;
  else if (roots.roots.size() == 2)
    info.type = ModuleType2::split;
  else
    info.type = info.algebra_dim == 2 ? ModuleType2::cyclic_double : ModuleType2::scalar;
  return info;
}

PointClassification classify_point_222(const bilin::BilinPoint& b) {
  if (b.n() != 1 || b.M1.d != 2 || b.M2.d != 2 || b.d3 != 2 || b.M1.r != 2 || b.M2.r != 2)
    throw DomainError("classify_point_222: requires n = 1, all d = 2 and r1 = r2 = 2");
  bilin::require_valid(b, "classify_point_222");
  const ModuleInfo2 i1 = module_type_2(b.M1), i2 = module_type_2(b.M2), i3 = module_type_2(bilin::target_module(b));
  if (i1.type == ModuleType2::nonsplit || i2.type == ModuleType2::nonsplit || i3.type == ModuleType2::nonsplit)
    throw DomainError("classify_point_222: support does not split over the field");

  PointClassification out;
  out.modules = {i1.type, i2.type, i3.type};
  out.tensor = tensor::classify_2x2x2(tensor::tensor_from_bilin(b));
  using T = ModuleType2;
  const T t1 = i1.type, t2 = i2.type;
  if (t1 == T::split && t2 == T::split)
    out.label = CaseLabel::main_split;
  else if (t1 == T::cyclic_double && t2 == T::cyclic_double)
    out.label = CaseLabel::cyclic_nilpotent;
  else if (t1 == T::cyclic_double && t2 == T::scalar)
    out.label = CaseLabel::mixed_12;
  else if (t1 == T::scalar && t2 == T::cyclic_double)
    out.label = CaseLabel::mixed_21;
  else if (t1 == T::scalar && t2 == T::scalar)
    out.label = CaseLabel::totally_degenerate;
  else if (t1 == T::split && t2 == T::scalar)
    out.label = CaseLabel::split_degenerate_12;
  else if (t1 == T::scalar && t2 == T::split)
    out.label = CaseLabel::split_degenerate_21;
  else
    throw InternalError("classify_point_222: module types " + to_string(t1) + ", " + to_string(t2) +
                        " admit no two-dimensional tensor product");

  auto expect = [&](bool cond, const std::string& what) {
    if (!cond) out.violations.push_back(to_string(out.label) + ": " + what);
  };
  const auto& tc = out.tensor;
  auto nonconcise_on = [&](std::size_t k) {
    return tc.orbit == tensor::Orbit222::non_concise_pair && tc.nonconcise_factor == std::optional<std::size_t>(k);
  };
  expect(tc.border_rank <= 2, "tensor has border rank above 2");
  switch (out.label) {
    case CaseLabel::main_split:
      expect(i3.type == T::split && i1.char_poly == i2.char_poly && i2.char_poly == i3.char_poly,
             "M1, M2, M3 are not the same split algebra");
      expect(tc.orbit == tensor::Orbit222::generic, "tensor is not concise of rank 2");
      break;
    case CaseLabel::cyclic_nilpotent:
      expect(i3.type == T::cyclic_double && i1.char_poly == i2.char_poly && i2.char_poly == i3.char_poly,
             "M3 is not the same cyclic module");
      expect(tc.orbit == tensor::Orbit222::w_type, "tensor is not W-type");
      break;
    case CaseLabel::mixed_12:
    case CaseLabel::mixed_21:
      expect(i3.type == T::scalar && i1.char_poly == i3.char_poly && i2.char_poly == i3.char_poly,
             "M3 is not (S/m)^2 at the common point");
      expect(nonconcise_on(out.label == CaseLabel::mixed_12 ? 0 : 1), "tensor is not non-concise on the cyclic factor");
      break;
    case CaseLabel::split_degenerate_12:
      expect(i3.type == T::scalar && i2.char_poly == i3.char_poly, "M3 is not (S/m)^2 at the support of M2");
      expect(nonconcise_on(0), "tensor is not non-concise on the split factor");
      break;
    case CaseLabel::split_degenerate_21:
      expect(i3.type == T::scalar && i1.char_poly == i3.char_poly, "M3 is not (S/m)^2 at the support of M1");
      expect(nonconcise_on(1), "tensor is not non-concise on the split factor");
      break;
    case CaseLabel::totally_degenerate:
      expect(i3.type == T::scalar && i1.char_poly == i2.char_poly && i2.char_poly == i3.char_poly,
             "M3 is not (S/m)^2 at the common point");
      break;
  }
  return out;
}

}  // namespace modspace::cases
