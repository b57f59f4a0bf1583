#include "modspace/bilin/bilin.hpp"
#include "modspace/error.hpp"

namespace modspace::bilin {

DimensionReport bilin_dims(std::size_t n, std::size_t d, std::size_t r1, std::size_t r2) {
  if (n < 1 || d < 1 || r1 < 1 || r2 < 1) throw DomainError("bilin_dims: arguments must be positive");
  DimensionReport rep;
  rep.n = n, rep.d = d, rep.r1 = r1, rep.r2 = r2;
  rep.main_dim = n * d + (r1 - 1) * d + (r2 - 1) * d;
  const bool large_framings = r1 >= d && r2 >= d;
  if (large_framings) rep.degenerate_dim = (r1 - d) * d + (r2 - d) * d + (d * d - d) * d;
  // degenerate_dim - main_dim = d (d^2 - 3d + 2 - n)
  const long long threshold = static_cast<long long>(d * d) - 3 * static_cast<long long>(d) + 2;
  rep.reducible_by_count = large_framings && static_cast<long long>(n) < threshold;
  rep.reducible_by_secant = large_framings && d >= 3;
  rep.irreducible = d <= 2;
  if (rep.reducible_by_count)
    rep.reason = "degenerate locus has dimension above the main component";
  else if (rep.reducible_by_secant)
    rep.reason = "tensors of the degenerate locus exceed the d-th secant variety";
  else if (rep.irreducible)
    rep.reason = d == 1 ? "isomorphic to affine space" : "every 2x2x2 tensor has border rank at most 2";
  else
    rep.reason = "no criterion applies";
  return rep;
}

}  // namespace modspace::bilin
