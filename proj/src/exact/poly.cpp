#include "modspace/exact/poly.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "modspace/error.hpp"

namespace modspace::exact {

Poly::Poly(Field f) : field_(f) {}

Poly::Poly(Field f, std::vector<Scalar> coeffs) : field_(f), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (!(c.field() == field_)) throw FieldMismatch("polynomial coefficient over wrong field");
  trim();
}

Poly::Poly(const Scalar& constant) : field_(constant.field()) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

Poly Poly::monomial(const Scalar& c, std::size_t exponent) {
  if (c.is_zero()) return Poly(c.field());
  std::vector<Scalar> cs(exponent + 1, Scalar(c.field()));
  cs[exponent] = c;
  return Poly(c.field(), std::move(cs));
}

Poly Poly::variable(Field f) { return monomial(Scalar(f, 1), 1); }

Poly Poly::linear_root(const Scalar& c) {
  return Poly(c.field(), {-c, Scalar(c.field(), 1)});
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar Poly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Scalar(field_);
}

Scalar Poly::leading() const {
  if (coeffs_.empty()) return Scalar(field_);
  return coeffs_.back();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().inverse());
}

Scalar Poly::eval(const Scalar& at) const {
  Scalar acc(field_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

Matrix Poly::eval(const Matrix& at) const {
  if (!at.is_square()) throw ShapeError("polynomial evaluated at non-square matrix");
  if (!(at.field() == field_)) throw FieldMismatch("polynomial evaluated over wrong field");
  const std::size_t n = at.rows();
  Matrix acc(field_, n, n);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * at;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
  }
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly(field_);
  std::vector<Scalar> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    d.push_back(coeffs_[k] * Scalar(field_, static_cast<long long>(k)));
  return Poly(field_, std::move(d));
}

Poly& Poly::operator+=(const Poly& o) {
  if (!(field_ == o.field_)) throw FieldMismatch("polynomial sum over different fields");
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(field_));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (!(field_ == o.field_)) throw FieldMismatch("polynomial difference over different fields");
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(field_));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (!(field_ == o.field_)) throw FieldMismatch("polynomial product over different fields");
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Scalar> out(coeffs_.size() + o.coeffs_.size() - 1, Scalar(field_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Poly Poly::scaled(const Scalar& s) const {
  Poly out = *this;
  for (auto& c : out.coeffs_) c *= s;
  out.trim();
  return out;
}

Poly Poly::shifted(std::size_t k) const {
  if (is_zero()) return *this;
  Poly out(field_);
  out.coeffs_.assign(k, Scalar(field_));
  out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return out;
}

Poly Poly::operator-() const { return scaled(Scalar(field_, -1)); }

std::string Poly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const bool unit = coeffs_[k].is_one();
    if (k == 0 || !unit) os << coeffs_[k].to_string();
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (!(a.field() == b.field())) throw FieldMismatch("polynomial division over different fields");
  const Field f = a.field();
  Poly rem = a;
  if (rem.degree() < b.degree()) return {Poly(f), rem};
  std::vector<Scalar> quot(static_cast<std::size_t>(rem.degree() - b.degree() + 1), Scalar(f));
  const Scalar inv_lead = b.leading().inverse();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const auto shift = static_cast<std::size_t>(rem.degree() - b.degree());
    const Scalar c = rem.leading() * inv_lead;
    quot[shift] = c;
    rem -= Poly::monomial(c, shift) * b;
  }
  return {Poly(f, std::move(quot)), rem};
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly powmod(const Poly& base, const mpz_class& e, const Poly& mod) {
  Poly result = divmod(Poly(Scalar(base.field(), 1)), mod).second;
  Poly b = divmod(base, mod).second;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = divmod(result * result, mod).second;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = divmod(result * b, mod).second;
  }
  return result;
}

namespace {

// Distinct roots of a product of distinct linear factors over F_p, p odd.
void split_linear(const Poly& g, std::mt19937_64& rng, std::vector<Scalar>& out) {
  const Field f = g.field();
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    out.push_back(-g.coeff(0) / g.coeff(1));
    return;
  }
  const std::uint64_t p = f.characteristic();
  mpz_class half;
  mpz_set_ui(half.get_mpz_t(), static_cast<unsigned long>((p - 1) / 2));
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  for (;;) {
    const Scalar a(f, static_cast<long long>(dist(rng)));
    const Poly shifted = Poly(f, {a, Scalar(f, 1)});
    Poly h = powmod(shifted, half, g) - Poly(Scalar(f, 1));
    Poly d = gcd(g, h);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      split_linear(d, rng, out);
      split_linear(divmod(g, d).first, rng, out);
      return;
    }
  }
}

std::vector<Scalar> distinct_roots_fp(const Poly& f, std::uint64_t seed) {
  const Field fld = f.field();
  const std::uint64_t p = fld.characteristic();
  std::vector<Scalar> out;
  if (p <= (1U << 16)) {
    for (std::uint64_t c = 0; c < p; ++c) {
      Scalar s(fld, static_cast<long long>(c));
      if (f.eval(s).is_zero()) out.push_back(s);
    }
    return out;
  }
  mpz_class pz;
  mpz_set_ui(pz.get_mpz_t(), static_cast<unsigned long>(p));
  const Poly xp = powmod(Poly::variable(fld), pz, f);
  const Poly g = gcd(f, xp - Poly::variable(fld));
  std::mt19937_64 rng(seed);
  split_linear(g, rng, out);
  return out;
}

std::vector<mpz_class> positive_divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<std::pair<mpz_class, unsigned>> factors;
  mpz_class m = n;
  for (mpz_class d = 2; d * d <= m; ++d) {
    unsigned e = 0;
    while (m % d == 0) {
      m /= d;
      ++e;
    }
    if (e) factors.emplace_back(d, e);
  }
  if (m > 1) factors.emplace_back(m, 1);
  std::vector<mpz_class> divs{1};
  for (const auto& [prime, e] : factors) {
    const std::size_t base = divs.size();
    mpz_class pw = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pw *= prime;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pw);
    }
  }
  return divs;
}

std::vector<Scalar> distinct_roots_q(const Poly& f) {
  // integer coefficients via the lcm of denominators
  mpz_class lcm = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.as_rational().get_den_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& c : f.coeffs()) {
    mpq_class scaled = c.as_rational() * lcm;
    ints.push_back(scaled.get_num());
  }
  std::vector<Scalar> out;
  std::size_t low = 0;
  while (low < ints.size() && ints[low] == 0) ++low;
  if (low > 0) out.push_back(Scalar(Field::rationals()));
  const mpz_class a0 = ints[low];
  const mpz_class an = ints.back();
  if (static_cast<int>(ints.size() - 1 - low) == 0) return out;
  for (const auto& num : positive_divisors(a0)) {
    for (const auto& den : positive_divisors(an)) {
      for (int sign : {1, -1}) {
        mpq_class cand(num * sign, den);
        cand.canonicalize();
        Scalar s = Scalar::rational(cand);
        if (f.eval(s).is_zero() &&
            std::find(out.begin(), out.end(), s) == out.end()) {
          out.push_back(s);
        }
      }
    }
  }
  return out;
}

}  // namespace

RootSet roots_in_field(const Poly& f, std::uint64_t seed) {
  if (f.is_zero()) throw DomainError("roots of the zero polynomial");
  const Field fld = f.field();
  std::vector<Scalar> distinct =
      fld.is_rational() ? distinct_roots_q(f) : distinct_roots_fp(f, seed);
  if (fld.is_rational()) {
    std::sort(distinct.begin(), distinct.end(),
              [](const Scalar& a, const Scalar& b) { return a.as_rational() < b.as_rational(); });
  } else {
    std::sort(distinct.begin(), distinct.end(),
              [](const Scalar& a, const Scalar& b) { return a.residue() < b.residue(); });
  }
  RootSet out;
  int accounted = 0;
  for (const auto& r : distinct) {
    Poly rest = f;
    std::size_t mult = 0;
    const Poly lin = Poly::linear_root(r);
    for (;;) {
      auto [q, rem] = divmod(rest, lin);
      if (!rem.is_zero()) break;
      rest = std::move(q);
      ++mult;
    }
    accounted += static_cast<int>(mult);
    out.roots.push_back({r, mult});
  }
  out.split = accounted == f.degree();
  return out;
}

}  // namespace modspace::exact
