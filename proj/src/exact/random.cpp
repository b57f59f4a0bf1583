#include "modspace/exact/random.hpp"

#include <algorithm>

#include "modspace/exact/linalg.hpp"

namespace modspace::exact {

Scalar random_scalar(Field f, Rng& rng, int bound) {
  if (f.is_prime()) {
    std::uniform_int_distribution<std::uint64_t> dist(0, f.characteristic() - 1);
    return Scalar(f, static_cast<long long>(dist(rng)));
  }
  std::uniform_int_distribution<int> dist(-bound, bound);
  return Scalar(f, dist(rng));
}

Scalar random_nonzero_scalar(Field f, Rng& rng, int bound) {
  for (;;) {
    Scalar s = random_scalar(f, rng, bound);
    if (!s.is_zero()) return s;
  }
}

Matrix random_matrix(Field f, std::size_t rows, std::size_t cols, Rng& rng, int bound) {
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_scalar(f, rng, bound);
  return m;
}

Matrix random_invertible(Field f, std::size_t n, Rng& rng, int bound) {
  return random_full_rank(f, n, n, rng, bound);
}

Matrix random_full_rank(Field f, std::size_t rows, std::size_t cols, Rng& rng, int bound) {
  for (;;) {
    Matrix m = random_matrix(f, rows, cols, rng, bound);
    if (rank(m) == std::min(rows, cols)) return m;
  }
}

}  // namespace modspace::exact
