#include "modspace/exact/counting.hpp"

#include <gmpxx.h>

#include "modspace/error.hpp"

namespace modspace::exact {

std::uint64_t gaussian_binomial(unsigned d, unsigned r, std::uint64_t q) {
  if (d > r) throw DomainError("gaussian_binomial: d > r");
  if (q < 2) throw DomainError("gaussian_binomial: q < 2");
  mpz_class qz;
  mpz_set_ui(qz.get_mpz_t(), static_cast<unsigned long>(q));
  auto qpow_minus_one = [&](unsigned e) {
    mpz_class v;
    mpz_pow_ui(v.get_mpz_t(), qz.get_mpz_t(), e);
    return mpz_class(v - 1);
  };
  // pair (q^{r-i} - 1) with (q^{i+1} - 1): every partial product is a Gaussian binomial
  mpz_class acc = 1;
  for (unsigned i = 0; i < d; ++i) {
    acc *= qpow_minus_one(r - i);
    mpz_class den = qpow_minus_one(i + 1);
    if (!mpz_divisible_p(acc.get_mpz_t(), den.get_mpz_t()))
      throw InternalError("gaussian_binomial: inexact division");
    mpz_divexact(acc.get_mpz_t(), acc.get_mpz_t(), den.get_mpz_t());
  }
  if (mpz_sizeinbase(acc.get_mpz_t(), 2) > 64) throw DomainError("gaussian_binomial overflows 64 bits");
  return static_cast<std::uint64_t>(mpz_get_ui(acc.get_mpz_t()));
}

}  // namespace modspace::exact
