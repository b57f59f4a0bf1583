#include <algorithm>
#include <random>
#include <thread>

#include "modspace/error.hpp"
#include "modspace/exact/linalg.hpp"
#include "modspace/exact/random.hpp"
#include "modspace/tensor/tensor.hpp"

namespace modspace::tensor {

namespace {

Vector random_nonzero_vector(Field f, std::size_t d, exact::Rng& rng) {
  for (;;) {
    Vector v(d, Scalar(f));
    for (auto& x : v) x = exact::random_scalar(f, rng, 1000);
    if (!exact::is_zero_vector(v)) return v;
  }
}

Vector outer(const Vector& a, const Vector& b, const Vector& c) {
  Vector out;
  out.reserve(a.size() * b.size() * c.size());
  for (const auto& x : a)
    for (const auto& y : b)
      for (const auto& z : c) out.push_back(x * y * z);
  return out;
}

// Rank of the span of affine tangent spaces at r random points of the Segre cone.
std::size_t terracini_rank(Field f, std::size_t d, std::size_t r, std::uint64_t seed) {
  std::seed_seq seq{seed, std::uint64_t(d), std::uint64_t(r)};
  exact::Rng rng(seq);
  exact::Span span(f, d * d * d);
  for (std::size_t p = 0; p < r; ++p) {
    Vector a = random_nonzero_vector(f, d, rng), b = random_nonzero_vector(f, d, rng),
           c = random_nonzero_vector(f, d, rng);
    for (std::size_t i = 0; i < d; ++i) {
      Vector e = exact::zero_vector(f, d);
      e[i] = Scalar(f, 1);
      span.add(outer(e, b, c));
      span.add(outer(a, e, c));
      span.add(outer(a, b, e));
    }
  }
  return span.dim();
}

}  // namespace

SecantReport secant_dimension(Field f, std::size_t d, std::size_t r, std::size_t trials, std::uint64_t seed,
                              std::size_t workers) {
  if (d == 0 || r == 0 || trials == 0) throw DomainError("secant_dimension: d, r and trials must be positive");
  SecantReport rep;
  rep.d = d;
  rep.r = r;
  rep.ambient = d * d * d - 1;
  rep.bound = std::min(rep.ambient, r * (3 * (d - 1) + 1) - 1);
  rep.trial_dims.assign(trials, 0);
  workers = std::max<std::size_t>(1, std::min(workers, trials));
  auto run = [&](std::size_t w) {
    for (std::size_t k = w; k < trials; k += workers) rep.trial_dims[k] = terracini_rank(f, d, r, seed + k) - 1;
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(run, w);
  run(0);
  for (auto& th : pool) th.join();
  rep.terracini_dim = *std::max_element(rep.trial_dims.begin(), rep.trial_dims.end());
  if (rep.terracini_dim > rep.bound) throw InternalError("secant_dimension: tangent span exceeds the expected bound");
  rep.fills_ambient = rep.terracini_dim == rep.ambient;
  return rep;
}

}  // namespace modspace::tensor
