#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace srdmod {

/// Coefficient field: the rationals (characteristic 0) or a prime field F_p
/// with p < 2^31.
class Field {
 public:
  constexpr Field() = default;

  static constexpr Field rationals() { return Field(); }
  /// Throws std::invalid_argument unless p is a prime below 2^31.
  static Field prime(std::uint32_t p);
  /// 0 selects the rationals.
  static Field of_characteristic(std::uint32_t p);

  constexpr std::uint32_t characteristic() const { return p_; }
  constexpr bool is_rational() const { return p_ == 0; }

  friend constexpr bool operator==(Field, Field) = default;

  std::string name() const;

 private:
  constexpr explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

/// An element of a Field. Values from different fields never mix: every
/// binary operation checks the field tags and throws std::invalid_argument
/// on mismatch.
class Scalar {
 public:
  Scalar() = default;
  Scalar(Field k, long value);
  Scalar(Field k, const mpz_class& value);
  /// In F_p the denominator must be invertible.
  Scalar(Field k, const mpq_class& value);

  static Scalar zero(Field k) { return Scalar(k, 0L); }
  static Scalar one(Field k) { return Scalar(k, 1L); }

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Exact rational value; in F_p the representative in [0, p).
  mpq_class to_rational() const;

  Scalar inverse() const;
  Scalar pow(unsigned e) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  void check_same(const Scalar& o) const;

  Field field_;
  mpq_class q_;           // used in characteristic 0
  std::uint64_t r_ = 0;   // used in characteristic p, always < p
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Exact binomial coefficient C(n, k); zero when k > n.
mpz_class binomial(unsigned long n, unsigned long k);

}  // namespace srdmod
