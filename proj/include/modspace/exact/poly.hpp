#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "modspace/exact/matrix.hpp"

namespace modspace::exact {

/// Univariate polynomial over an exact field; coefficients stored low degree first.
class Poly {
 public:
  explicit Poly(Field f = Field{});
  Poly(Field f, std::vector<Scalar> coeffs);
  explicit Poly(const Scalar& constant);

  static Poly monomial(const Scalar& c, std::size_t exponent);
  static Poly variable(Field f);
  /// x - c
  static Poly linear_root(const Scalar& c);

  Field field() const noexcept { return field_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  /// Zero outside the stored range.
  Scalar coeff(std::size_t k) const;
  Scalar leading() const;
  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }

  Poly monic() const;
  Scalar eval(const Scalar& at) const;
  /// Horner evaluation at a square matrix.
  Matrix eval(const Matrix& at) const;
  Poly derivative() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly scaled(const Scalar& s) const;
  Poly shifted(std::size_t k) const;  // multiply by x^k
  Poly operator-() const;

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string(char var = 'x') const;

 private:
  void trim();

  Field field_;
  std::vector<Scalar> coeffs_;
};

/// Quotient and remainder; throws DomainError on division by zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Monic gcd (zero if both are zero).
Poly gcd(Poly a, Poly b);
/// base^e mod m for e given as a decimal-free big integer.
Poly powmod(const Poly& base, const mpz_class& e, const Poly& mod);

struct Root {
  Scalar value;
  std::size_t multiplicity;
};

/// Roots lying in the coefficient field, with multiplicities, sorted by their string form
/// (rationals ascending numerically). `split` is true when they account for the full degree.
struct RootSet {
  std::vector<Root> roots;
  bool split = false;
};

/// Throws DomainError on the zero polynomial.
RootSet roots_in_field(const Poly& f, std::uint64_t seed = 0x5eed);

}  // namespace modspace::exact
