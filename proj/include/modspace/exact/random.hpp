#pragma once

#include <cstdint>
#include <random>

#include "modspace/exact/matrix.hpp"

namespace modspace::exact {

using Rng = std::mt19937_64;

/// Uniform over F_p; over Q a small integer in [-bound, bound].
Scalar random_scalar(Field f, Rng& rng, int bound = 3);
Scalar random_nonzero_scalar(Field f, Rng& rng, int bound = 3);
Matrix random_matrix(Field f, std::size_t rows, std::size_t cols, Rng& rng, int bound = 3);
/// Rejection-sampled invertible matrix.
Matrix random_invertible(Field f, std::size_t n, Rng& rng, int bound = 3);
/// Rejection-sampled matrix of full rank min(rows, cols).
Matrix random_full_rank(Field f, std::size_t rows, std::size_t cols, Rng& rng, int bound = 3);

}  // namespace modspace::exact
