#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "srdmod/monomial.hpp"
#include "srdmod/scalar.hpp"

namespace srdmod {

/// Sparse polynomial in S = K[x_1..x_n]. Terms are kept in a map keyed by
/// exponent vector; zero coefficients are never stored.
class Polynomial {
 public:
  using Terms = std::map<ExponentVector, Scalar>;

  Polynomial() = default;
  Polynomial(Field k, std::size_t nvars) : field_(k), nvars_(nvars) {}

  static Polynomial constant(Field k, std::size_t nvars, const Scalar& c);
  static Polynomial monomial(Field k, const ExponentVector& e, const Scalar& c);
  static Polynomial monomial(Field k, const ExponentVector& e) {
    return monomial(k, e, Scalar::one(k));
  }
  static Polynomial variable(Field k, std::size_t nvars, std::size_t i);

  Field field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  /// Total degree; -1 for the zero polynomial.
  long degree() const;
  Scalar coefficient(const ExponentVector& e) const;

  void add_term(const ExponentVector& e, const Scalar& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Scalar& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial pow(unsigned e) const;
  /// Multiply by the monomial x^e.
  Polynomial shifted(const ExponentVector& e) const;

  /// Divided partial derivative d_i^[s], acting by x_i^v -> C(v,s) x_i^(v-s).
  Polynomial divided_partial(std::size_t i, unsigned s) const;

  /// Exact division: the quotient q with q * d == *this, or nullopt when d
  /// does not divide. Multivariate division by a single polynomial
  /// (lexicographic leading terms), so a zero remainder decides divisibility.
  std::optional<Polynomial> divide_exact(const Polynomial& d) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Canonical rendering, degree-lexicographic, e.g. "3*x^2*y - 1/2*w".
  std::string to_string(const std::vector<std::string>& labels) const;
  std::string to_string() const { return to_string(default_labels(nvars_)); }

 private:
  void check_compatible(const Polynomial& o) const;

  Field field_;
  std::size_t nvars_ = 0;
  Terms terms_;
};

/// Shared helper for rendering "coefficient * monomial" sums.
std::string render_sum(const std::vector<std::pair<Scalar, std::string>>& terms);

}  // namespace srdmod
