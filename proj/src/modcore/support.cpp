#include "modspace/error.hpp"
#include "modspace/modcore/framed_module.hpp"

namespace modspace::modcore {

Support support_univariate(const FramedModule& m) {
  if (m.n != 1) throw DomainError("support_univariate: requires n = 1");
  check_shapes(m);
  auto roots = exact::roots_in_field(char_poly(m.X[0]));
  return Support{std::move(roots.roots), roots.split};
}

}  // namespace modspace::modcore
