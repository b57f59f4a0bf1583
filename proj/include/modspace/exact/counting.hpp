#pragma once

#include <cstdint>

namespace modspace::exact {

/// Number of d-dimensional quotients of F_q^r: prod_{i<d} (q^{r-i} - 1) / (q^{d-i} - 1).
/// Throws DomainError for d > r or q < 2, and DomainError if the count overflows 64 bits.
std::uint64_t gaussian_binomial(unsigned d, unsigned r, std::uint64_t q);

}  // namespace modspace::exact
