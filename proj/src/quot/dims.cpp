#include <set>
#include <string>

#include "modspace/error.hpp"
#include "modspace/exact/counting.hpp"
#include "modspace/exact/linalg.hpp"
#include "modspace/quot/quot.hpp"

namespace modspace::quot {

QuotDims quot_dims(std::size_t n, std::size_t d, std::size_t r) {
  if (n < 1 || d < 1 || r < 1) throw DomainError("quot_dims: n, d, r must be positive");
  QuotDims out;
  out.principal_dim = n * d + (r - 1) * d;
  if (r >= d) out.degenerate_dim = (r - d) * d;
  // n < 1 - d never holds for n >= 1
  out.reducible_by_count = static_cast<long long>(n) < 1 - static_cast<long long>(d);
  return out;
}

GrassmannianReport degenerate_grassmannian_check(std::size_t d, std::size_t r, std::uint64_t q,
                                                 std::uint64_t cap) {
  if (d > r) throw DomainError("degenerate_grassmannian_check: requires r >= d");
  const Field f = Field::prime(q);
  const std::size_t cells = d * r;
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < cells; ++k) {
    if (total > cap / q) throw CapExceeded("degenerate_grassmannian_check: q^(dr) exceeds the cap");
    total *= q;
  }
  GrassmannianReport out;
  out.expected = exact::gaussian_binomial(static_cast<unsigned>(d), static_cast<unsigned>(r), q);
  std::set<std::string> classes;
  for (std::uint64_t code = 0; code < total; ++code) {
    Matrix a(f, d, r);
    std::uint64_t c = code;
    for (std::size_t k = 0; k < cells; ++k, c /= q) a(k / r, k % r) = Scalar(f, static_cast<long long>(c % q));
    ++out.matrices_scanned;
    if (exact::rank(a) != d) continue;
    FramedModule m = modcore::canonical_form(modcore::make_degenerate(d, r, a));
    classes.insert(m.G.to_string());
  }
  out.enumerated = classes.size();
  return out;
}

}  // namespace modspace::quot
