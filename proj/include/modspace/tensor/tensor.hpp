#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modspace/bilin/bilin.hpp"
#include "modspace/exact/tensor3.hpp"

namespace modspace::tensor {

using exact::Field;
using exact::Matrix;
using exact::Scalar;
using exact::Tensor3;
using exact::Vector;

struct Conciseness {
  std::array<std::size_t, 3> flattening_ranks{};
  std::array<bool, 3> concise{};
  bool all() const noexcept { return concise[0] && concise[1] && concise[2]; }
};

/// Factor k is concise iff the k-th flattening has rank dims[k].
Conciseness conciseness(const Tensor3& t);

/// Coefficient (i, j, k) = Pihat[k][i d2 + j].
Tensor3 tensor_from_bilin(const bilin::BilinPoint& b);

enum class Orbit222 { zero, rank_one, non_concise_pair, generic, w_type };
std::string to_string(Orbit222 o);

/// Labels are geometric: they describe the tensor over the algebraic closure.
struct Classification222 {
  unsigned rank = 0;
  unsigned border_rank = 0;
  std::array<bool, 3> concise{};
  std::optional<std::size_t> nonconcise_factor;  // for non_concise_pair
  Orbit222 orbit = Orbit222::zero;
  std::string label() const;
  friend bool operator==(const Classification222&, const Classification222&) = default;
};

/// Flattening ranks plus separability of the pencil det(x A + y B) of third-factor
/// slices. With `check` in characteristic != 2, the pencil discriminant is compared
/// with the Cayley hyperdeterminant and InternalError is thrown on disagreement.
Classification222 classify_2x2x2(const Tensor3& t, bool check = false);

/// Coefficients (a, b, c) of det(x A + y B) = a x^2 + b x y + c y^2.
std::array<Scalar, 3> pencil_form(const Tensor3& t);
Scalar hyperdeterminant(const Tensor3& t);

struct BruteForceRank {
  std::optional<unsigned> rank;  // empty: rank exceeds rmax
  std::uint64_t states = 0;      // tensors reached by the search
  std::size_t rank_one_count = 0;
};

/// Smallest r <= rmax with a decomposition into r rank-one tensors over F_q, by
/// breadth-first search from 0. Throws CapExceeded if q^(d1 d2 d3) > cap.
BruteForceRank brute_force_rank_fq(const Tensor3& t, unsigned rmax, std::uint64_t cap = 1u << 24);

Tensor3 unit_tensor(Field f, std::size_t d);

/// Structure constants of S/Ann(M) in the word basis grown from generator column
/// `generator`; throws DomainError if that column does not generate M.
Tensor3 multiplication_tensor(const modcore::FramedModule& m, std::size_t generator = 0);

struct SecantReport {
  std::size_t d = 0, r = 0;
  std::size_t terracini_dim = 0;
  std::size_t bound = 0;
  std::size_t ambient = 0;  // d^3 - 1
  bool fills_ambient = false;
  std::vector<std::size_t> trial_dims;
};

/// Dimension of the r-th secant variety of the Segre P^{d-1} x P^{d-1} x P^{d-1},
/// as the span of affine tangent spaces at r random points (max over trials) minus one.
SecantReport secant_dimension(Field f, std::size_t d, std::size_t r, std::size_t trials = 5,
                              std::uint64_t seed = 1, std::size_t workers = 1);

}  // namespace modspace::tensor
