#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace modspace::exact {

/// Computation field: the rationals or a prime field F_p.
class Field {
 public:
  constexpr Field() = default;  // Q

  static constexpr Field rationals() { return Field{}; }
  /// Throws DomainError unless p is prime and below 2^62.
  static Field prime(std::uint64_t p);
  /// Parses "Q" or "F:<p>".
  static Field parse(std::string_view text);

  constexpr bool is_rational() const noexcept { return p_ == 0; }
  constexpr bool is_prime() const noexcept { return p_ != 0; }
  /// 0 for Q.
  constexpr std::uint64_t characteristic() const noexcept { return p_; }
  std::string to_string() const;

  friend constexpr bool operator==(Field, Field) = default;

 private:
  explicit constexpr Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

/// Exact field element. Arithmetic between different fields throws FieldMismatch.
class Scalar {
 public:
  explicit Scalar(Field f = Field{});
  Scalar(Field f, long long v);
  static Scalar rational(const mpq_class& q);
  static Scalar rational(long long num, long long den);
  /// "a/b" or "c" over Q; a decimal residue (any integer, reduced mod p) over F_p.
  static Scalar parse(Field f, std::string_view text);

  Field field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Throws DomainError on zero.
  Scalar inverse() const;

  const mpq_class& as_rational() const;
  std::uint64_t residue() const;

  std::string to_string() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  void require_same(const Scalar& o) const;

  Field field_;
  std::variant<std::uint64_t, mpq_class> value_;
};

}  // namespace modspace::exact
