#include <algorithm>

#include "modspace/error.hpp"
#include "modspace/tensor/tensor.hpp"

namespace modspace::tensor {

namespace {

using Digits = std::vector<std::uint32_t>;

std::uint64_t encode(const Digits& d, std::uint64_t q) {
  std::uint64_t code = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) code = code * q + *it;
  return code;
}

Digits decode(std::uint64_t code, std::size_t n, std::uint64_t q) {
  Digits d(n);
  for (std::size_t i = 0; i < n; ++i, code /= q) d[i] = static_cast<std::uint32_t>(code % q);
  return d;
}

// all nonzero vectors of F_q^n in base-q digit form
std::vector<Digits> nonzero_vectors(std::size_t n, std::uint64_t q) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= q;
  std::vector<Digits> out;
  for (std::uint64_t c = 1; c < total; ++c) out.push_back(decode(c, n, q));
  return out;
}

}  // namespace

BruteForceRank brute_force_rank_fq(const Tensor3& t, unsigned rmax, std::uint64_t cap) {
  const Field f = t.field();
  if (!f.is_prime()) throw DomainError("brute_force_rank_fq: requires a prime field");
  const std::uint64_t q = f.characteristic();
  const auto dims = t.dims();
  const std::size_t n = dims[0] * dims[1] * dims[2];
  std::uint64_t states = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (states > cap / q) throw CapExceeded("brute_force_rank_fq: q^(d1 d2 d3) exceeds the state cap");
    states *= q;
  }

  Digits target(n);
  for (std::size_t i = 0; i < n; ++i) target[i] = static_cast<std::uint32_t>(t.coeffs()[i].residue());
  const std::uint64_t goal = encode(target, q);

  // rank-one tensors, deduplicated by code
  std::vector<std::uint64_t> rank_one;
  auto va = nonzero_vectors(dims[0], q), vb = nonzero_vectors(dims[1], q), vc = nonzero_vectors(dims[2], q);
  Digits buf(n);
  for (const auto& a : va)
    for (const auto& b : vb)
      for (const auto& c : vc) {
        for (std::size_t i = 0; i < dims[0]; ++i)
          for (std::size_t j = 0; j < dims[1]; ++j)
            for (std::size_t k = 0; k < dims[2]; ++k)
              buf[(i * dims[1] + j) * dims[2] + k] = static_cast<std::uint32_t>((std::uint64_t(a[i]) * b[j] % q) * c[k] % q);
        rank_one.push_back(encode(buf, q));
      }
  std::sort(rank_one.begin(), rank_one.end());
  rank_one.erase(std::unique(rank_one.begin(), rank_one.end()), rank_one.end());
  std::vector<Digits> rank_one_digits;
  for (auto code : rank_one) rank_one_digits.push_back(decode(code, n, q));

  BruteForceRank out;
  out.rank_one_count = rank_one.size();
  std::vector<bool> seen(states, false);
  std::vector<std::uint64_t> frontier{0};
  seen[0] = true;
  out.states = 1;
  for (unsigned r = 0;; ++r) {
    if (std::find(frontier.begin(), frontier.end(), goal) != frontier.end()) {
      out.rank = r;
      return out;
    }
    if (r == rmax || frontier.empty()) return out;
    std::vector<std::uint64_t> next;
    for (auto code : frontier) {
      Digits base = decode(code, n, q);
      for (const auto& ro : rank_one_digits) {
        for (std::size_t i = 0; i < n; ++i) buf[i] = static_cast<std::uint32_t>((base[i] + ro[i]) % q);
        std::uint64_t c = encode(buf, q);
        if (seen[c]) continue;
        seen[c] = true;
        next.push_back(c);
      }
    }
    out.states += next.size();
    frontier = std::move(next);
  }
}

}  // namespace modspace::tensor
