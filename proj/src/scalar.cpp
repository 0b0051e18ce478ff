#include "srdmod/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace srdmod {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t mod_of(const mpz_class& v, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return r.get_ui();
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw std::invalid_argument("characteristic must be 0 or a prime below 2^31, got " +
                                std::to_string(p));
  return Field(p);
}

Field Field::of_characteristic(std::uint32_t p) { return p == 0 ? rationals() : prime(p); }

std::string Field::name() const { return p_ == 0 ? "QQ" : "GF(" + std::to_string(p_) + ")"; }

Scalar::Scalar(Field k, long value) : field_(k) {
  if (k.is_rational())
    q_ = value;
  else
    r_ = mod_of(mpz_class(value), k.characteristic());
}

Scalar::Scalar(Field k, const mpz_class& value) : field_(k) {
  if (k.is_rational())
    q_ = value;
  else
    r_ = mod_of(value, k.characteristic());
}

Scalar::Scalar(Field k, const mpq_class& value) : field_(k) {
  if (k.is_rational()) {
    q_ = value;
    q_.canonicalize();
    return;
  }
  const std::uint32_t p = k.characteristic();
  const std::uint64_t den = mod_of(value.get_den(), p);
  if (den == 0)
    throw std::domain_error("denominator " + value.get_den().get_str() + " vanishes in " +
                            k.name());
  r_ = mod_of(value.get_num(), p) * mod_pow(den, p - 2, p) % p;
}

bool Scalar::is_zero() const { return field_.is_rational() ? sgn(q_) == 0 : r_ == 0; }

bool Scalar::is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1; }

mpq_class Scalar::to_rational() const {
  if (field_.is_rational()) return q_;
  return mpq_class(mpz_class(static_cast<unsigned long>(r_)));
}

void Scalar::check_same(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw std::invalid_argument("scalar field mismatch: " + field_.name() + " vs " +
                                o.field_.name());
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Scalar r = *this;
  if (field_.is_rational())
    r.q_ = 1 / q_;
  else
    r.r_ = mod_pow(r_, field_.characteristic() - 2, field_.characteristic());
  return r;
}

Scalar Scalar::pow(unsigned e) const {
  Scalar r = one(field_);
  Scalar b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (field_.is_rational())
    r.q_ = -q_;
  else if (r_ != 0)
    r.r_ = field_.characteristic() - r_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational())
    q_ += o.q_;
  else
    r_ = (r_ + o.r_) % field_.characteristic();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational())
    q_ -= o.q_;
  else
    r_ = (r_ + field_.characteristic() - o.r_) % field_.characteristic();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational())
    q_ *= o.q_;
  else
    r_ = r_ * o.r_ % field_.characteristic();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string Scalar::to_string() const {
  return field_.is_rational() ? q_.get_str() : std::to_string(r_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

mpz_class binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace srdmod
