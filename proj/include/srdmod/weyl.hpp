#pragma once

#include <map>
#include <string>
#include <vector>

#include "srdmod/polynomial.hpp"

namespace srdmod {

/// x^a d^[t]: all x-factors to the left of the divided powers.
struct OperatorMonomial {
  ExponentVector a;
  ExponentVector t;

  std::uint64_t degree() const { return a.degree() + t.degree(); }
  friend bool operator==(const OperatorMonomial&, const OperatorMonomial&) = default;
  friend auto operator<=>(const OperatorMonomial&, const OperatorMonomial&) = default;

  /// e.g. "x1^2*d1^[3]".
  std::string to_string(const std::vector<std::string>& labels) const;
};

/// Element of the divided-power Weyl algebra D(S;K) in normal form: a finite
/// K-linear combination of operator monomials, ordered lexicographically on
/// (a, t). Divided powers are basis symbols, so the same representation is
/// valid in every characteristic.
class DiffOp {
 public:
  using Terms = std::map<OperatorMonomial, Scalar>;

  DiffOp() = default;
  DiffOp(Field k, std::size_t nvars) : field_(k), nvars_(nvars) {}

  static DiffOp monomial(Field k, const OperatorMonomial& m, const Scalar& c);
  static DiffOp monomial(Field k, const OperatorMonomial& m) {
    return monomial(k, m, Scalar::one(k));
  }
  static DiffOp identity(Field k, std::size_t nvars);
  /// Multiplication by p, an order-0 operator.
  static DiffOp multiplication(const Polynomial& p);
  /// x_i d_i^[t]; for t = 0 this is multiplication by x_i.
  static DiffOp x_dt(Field k, std::size_t nvars, std::size_t i, unsigned t);

  Field field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const OperatorMonomial& m) const;

  void add_term(const OperatorMonomial& m, const Scalar& c);

  DiffOp operator-() const;
  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);
  DiffOp& operator*=(const Scalar& c);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  friend DiffOp operator*(DiffOp a, const Scalar& c) { return a *= c; }
  friend DiffOp operator*(const Scalar& c, DiffOp a) { return a *= c; }
  friend bool operator==(const DiffOp& a, const DiffOp& b);

  /// Largest total degree |a| + |t| over the terms; -1 for zero.
  long total_degree() const;

  std::string to_string(const std::vector<std::string>& labels) const;
  std::string to_string() const { return to_string(default_labels(nvars_)); }

 private:
  void check_compatible(const DiffOp& o) const;

  Field field_;
  std::size_t nvars_ = 0;
  Terms terms_;
};

/// K-linear action on S: x^a d^[t] sends x^v to prod_i C(v_i, t_i) x^(a+v-t).
Polynomial apply(const DiffOp& op, const Polynomial& p);

/// Normal form of the composition lhs o rhs.
DiffOp compose(const DiffOp& lhs, const DiffOp& rhs);

/// [lhs, rhs] = lhs o rhs - rhs o lhs.
DiffOp commutator(const DiffOp& lhs, const DiffOp& rhs);

/// Order of the operator: the largest |t| over its terms; -1 for zero.
long order(const DiffOp& op);

/// d^[s] x^b in one variable, as the coefficients c_k of x^(b-k) d^[s-k],
/// k = 0..min(s, b). Obtained by repeatedly applying the single rewrite
/// d^[s] x = x d^[s] + d^[s-1].
std::vector<mpz_class> commute_past_power(unsigned s, unsigned b);

}  // namespace srdmod
