#include "modspace/exact/scalar.hpp"

#include <charconv>

#include "modspace/error.hpp"

namespace modspace::exact {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t acc = 1 % p;
  base %= p;
  while (e != 0) {
    if (e & 1U) acc = mul_mod(acc, base, p);
    base = mul_mod(base, base, p);
    e >>= 1U;
  }
  return acc;
}

std::uint64_t reduce_signed(long long v, std::uint64_t p) {
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += static_cast<long long>(p);
  return static_cast<std::uint64_t>(r);
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p < 2 || p >= (std::uint64_t{1} << 62)) {
    throw DomainError("prime field modulus out of range: " + std::to_string(p));
  }
  mpz_class z;
  mpz_set_ui(z.get_mpz_t(), static_cast<unsigned long>(p));
  if (mpz_probab_prime_p(z.get_mpz_t(), 40) == 0) {
    throw DomainError("modulus is not prime: " + std::to_string(p));
  }
  return Field{p};
}

Field Field::parse(std::string_view text) {
  if (text == "Q") return Field::rationals();
  if (text.size() > 2 && text.substr(0, 2) == "F:") {
    std::uint64_t p = 0;
    auto digits = text.substr(2);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
      throw ParseError("field", "bad prime in '" + std::string(text) + "'");
    }
    try {
      return Field::prime(p);
    } catch (const DomainError& e) {
      throw ParseError("field", e.what());
    }
  }
  throw ParseError("field", "expected \"Q\" or \"F:<p>\", got '" + std::string(text) + "'");
}

std::string Field::to_string() const {
  return is_rational() ? std::string("Q") : "F:" + std::to_string(p_);
}

Scalar::Scalar(Field f) : field_(f) {
  if (f.is_rational()) {
    value_ = mpq_class(0);
  } else {
    value_ = std::uint64_t{0};
  }
}

Scalar::Scalar(Field f, long long v) : field_(f) {
  if (f.is_rational()) {
    value_ = mpq_class(static_cast<long>(v));
  } else {
    value_ = reduce_signed(v, f.characteristic());
  }
}

Scalar Scalar::rational(const mpq_class& q) {
  Scalar s(Field::rationals());
  mpq_class c = q;
  c.canonicalize();
  s.value_ = std::move(c);
  return s;
}

Scalar Scalar::rational(long long num, long long den) {
  if (den == 0) throw DomainError("zero denominator");
  mpq_class q(static_cast<long>(num), static_cast<long>(den));
  return rational(q);
}

Scalar Scalar::parse(Field f, std::string_view text) {
  std::string s(text);
  if (f.is_rational()) {
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0) {
      throw ParseError("scalar", "not a rational: '" + s + "'");
    }
    if (q.get_den() == 0) throw ParseError("scalar", "zero denominator: '" + s + "'");
    return rational(q);
  }
  mpz_class z;
  if (s.empty() || z.set_str(s, 10) != 0) {
    throw ParseError("scalar", "not an integer residue: '" + s + "'");
  }
  mpz_class p;
  mpz_set_ui(p.get_mpz_t(), static_cast<unsigned long>(f.characteristic()));
  mpz_class r;
  mpz_mod(r.get_mpz_t(), z.get_mpz_t(), p.get_mpz_t());
  Scalar out(f);
  out.value_ = static_cast<std::uint64_t>(mpz_get_ui(r.get_mpz_t()));
  return out;
}

bool Scalar::is_zero() const noexcept {
  if (const auto* r = std::get_if<std::uint64_t>(&value_)) return *r == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const noexcept {
  if (const auto* r = std::get_if<std::uint64_t>(&value_)) return *r == 1;
  return std::get<mpq_class>(value_) == 1;
}

const mpq_class& Scalar::as_rational() const {
  if (!field_.is_rational()) throw FieldMismatch("scalar is not rational");
  return std::get<mpq_class>(value_);
}

std::uint64_t Scalar::residue() const {
  if (field_.is_rational()) throw FieldMismatch("scalar is not a prime-field residue");
  return std::get<std::uint64_t>(value_);
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<std::uint64_t>(&value_)) return std::to_string(*r);
  return std::get<mpq_class>(value_).get_str();
}

void Scalar::require_same(const Scalar& o) const {
  if (!(field_ == o.field_)) {
    throw FieldMismatch("field mismatch: " + field_.to_string() + " vs " + o.field_.to_string());
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  Scalar out(field_);
  if (field_.is_rational()) {
    mpq_class q = 1 / std::get<mpq_class>(value_);
    out.value_ = std::move(q);
  } else {
    const std::uint64_t p = field_.characteristic();
    out.value_ = pow_mod(std::get<std::uint64_t>(value_), p - 2, p);
  }
  return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same(o);
  if (auto* r = std::get_if<std::uint64_t>(&value_)) {
    const std::uint64_t p = field_.characteristic();
    *r += std::get<std::uint64_t>(o.value_);
    if (*r >= p) *r -= p;
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same(o);
  if (auto* r = std::get_if<std::uint64_t>(&value_)) {
    const std::uint64_t p = field_.characteristic();
    const std::uint64_t b = std::get<std::uint64_t>(o.value_);
    *r = (*r >= b) ? *r - b : *r + p - b;
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same(o);
  if (auto* r = std::get_if<std::uint64_t>(&value_)) {
    *r = mul_mod(*r, std::get<std::uint64_t>(o.value_), field_.characteristic());
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same(o);
  return *this *= o.inverse();
}

Scalar Scalar::operator-() const {
  Scalar out(field_);
  return out -= *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.value_ == b.value_;
}

}  // namespace modspace::exact
