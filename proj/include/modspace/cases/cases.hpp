#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "modspace/bilin/bilin.hpp"
#include "modspace/exact/param.hpp"
#include "modspace/tensor/tensor.hpp"

namespace modspace::cases {

using exact::Field;
using exact::ParamTensor;
using exact::Scalar;
using exact::Tensor3;

struct NamedTensor {
  std::string name;
  ParamTensor value;
  bool parametric = false;
  std::string limit;  // name of the value at t = 0, for families
};

/// mu1..mu4, the families mu2_t, mu3_t, mu4_t and pi5_sample. DomainError for other names.
NamedTensor named_tensor(Field f, const std::string& name);
std::vector<std::string> named_tensor_names();

struct LimitSample {
  Scalar t;
  tensor::Classification222 cls;
};

struct LimitReport {
  bool limit_matches = false;
  tensor::Classification222 limit_class;
  std::vector<LimitSample> samples;
  bool samples_concise_rank2 = false;  // every sample concise of rank 2
  bool samples_identical = false;      // F(t) == F(0) at every sample
  bool rank_drop = false;              // concise rank-2 samples degenerate at t = 0
};

LimitReport verify_limit(const ParamTensor& family, const Tensor3& target, const std::vector<Scalar>& samples);

/// Isomorphism type of a two-dimensional module over k[x].
enum class ModuleType2 { split, cyclic_double, scalar, nonsplit };
std::string to_string(ModuleType2 t);

struct ModuleInfo2 {
  ModuleType2 type = ModuleType2::nonsplit;
  exact::Poly char_poly;
  std::size_t algebra_dim = 0;
};

ModuleInfo2 module_type_2(const modcore::FramedModule& m);

enum class CaseLabel {
  main_split,
  cyclic_nilpotent,
  mixed_12,
  mixed_21,
  totally_degenerate,
  split_degenerate_12,  // M1 = S/(x-c1)(x-c2), M2 = (S/(x-c1))^2
  split_degenerate_21,
};
std::string to_string(CaseLabel l);
std::vector<CaseLabel> all_case_labels();

struct PointClassification {
  CaseLabel label = CaseLabel::main_split;
  tensor::Classification222 tensor;
  std::array<ModuleType2, 3> modules{};
  std::vector<std::string> violations;  // forced consequences that failed
};

/// For valid points with n = 1, d = 2, r1 = r2 = 2. Throws DomainError when a
/// characteristic polynomial does not split over the field.
PointClassification classify_point_222(const bilin::BilinPoint& b);

struct CensusKey {
  std::string label;
  std::string tensor_class;
  auto operator<=>(const CensusKey&) const = default;
};

struct Census {
  std::uint64_t q = 0;
  std::size_t quot_classes = 0;  // points of Quot_2^2(A^1)(F_q)
  std::uint64_t points = 0;      // all points, including non-split ones
  std::uint64_t nonsplit = 0;
  std::uint64_t border_rank3 = 0;
  std::uint64_t membership_mismatches = 0;
  std::map<std::string, std::uint64_t> by_label;
  std::map<CensusKey, std::uint64_t> by_class;
  std::map<CensusKey, bilin::BilinPoint> examples;  // first point of each class in enumeration order
  std::vector<std::string> violations;

  bool ok() const { return border_rank3 == 0 && membership_mismatches == 0 && violations.empty(); }
};

/// Canonical representatives of Quot_2^2(A^1)(F_q), in a fixed order.
std::vector<modcore::FramedModule> quot_classes_222(std::uint64_t q);

/// Every point of Bilin_{2,2,2}^{2,2}(A^1)(F_q), one per kernel class. Each point is
/// built from a two-dimensional invariant quotient of M1 (x)_S M2 and re-derived by
/// factor_membership. Throws CapExceeded when q^8 > cap.
Census enumerate_222(std::uint64_t q, std::size_t workers = 1, std::uint64_t cap = 1u << 20);

}  // namespace modspace::cases
