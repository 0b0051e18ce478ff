#pragma once

#include <memory>
#include <string>
#include <vector>

#include "srdmod/complex.hpp"
#include "srdmod/weyl.hpp"

namespace srdmod {

/// R_f for f a monomial of R = K[cx], or for an arbitrary f when the face
/// ideal is trivial (R = S, nothing to saturate).
///
/// J = I_cx : f^infinity is stored by the supports of its minimal monomial
/// generators in S; it contains I_cx, and f is a nonzerodivisor on S/J.
class LocalizedContext {
 public:
  /// Monomial f. Throws std::domain_error when f is zero in R.
  static LocalizedContext saturate(std::shared_ptr<const SimplicialComplex> cx, Field k,
                                   const ExponentVector& f);
  /// Arbitrary nonzero f; throws std::domain_error unless I_cx = 0.
  static LocalizedContext over_polynomial_ring(std::shared_ptr<const SimplicialComplex> cx,
                                               const Polynomial& f);

  const SimplicialComplex& complex() const { return *cx_; }
  std::shared_ptr<const SimplicialComplex> complex_ptr() const { return cx_; }
  Field field() const { return f_.field(); }
  std::size_t nvars() const { return f_.nvars(); }
  const Polynomial& f() const { return f_; }
  bool monomial_f() const { return f_.is_monomial(); }
  /// Total degree of f.
  unsigned d() const { return static_cast<unsigned>(f_.degree()); }
  const std::vector<VertexSet>& saturation_generators() const { return j_gens_; }
  /// Smallest m with (I : f^m) = (I : f^(m+1)).
  unsigned sat_exponent() const { return sat_exponent_; }

  bool in_saturation(const ExponentVector& e) const;
  /// Deletes the monomials lying in J.
  Polynomial reduce(const Polynomial& p) const;

  std::string describe() const;

 private:
  LocalizedContext(std::shared_ptr<const SimplicialComplex> cx, Polynomial f)
      : cx_(std::move(cx)), f_(std::move(f)) {}

  std::shared_ptr<const SimplicialComplex> cx_;
  Polynomial f_;
  std::vector<VertexSet> j_gens_;
  unsigned sat_exponent_ = 0;
};

/// g / f^k in R_f. Canonical form: g reduced modulo J, and f does not divide
/// g unless k = 0; zero is 0 / f^0.
class Fraction {
 public:
  /// Canonicalizes.
  Fraction(const LocalizedContext& ctx, Polynomial g, unsigned k);

  const Polynomial& numerator() const { return g_; }
  unsigned exponent() const { return k_; }
  bool is_zero() const { return g_.is_zero(); }

  friend bool operator==(const Fraction& a, const Fraction& b) { return a.k_ == b.k_ && a.g_ == b.g_; }

  std::string to_string(const LocalizedContext& ctx) const;

 private:
  Polynomial g_;
  unsigned k_ = 0;
};

/// Cross-multiplication in S/J.
bool frac_equal(const Fraction& u, const Fraction& v, const LocalizedContext& ctx);

Fraction frac_add(const Fraction& u, const Fraction& v, const LocalizedContext& ctx);
Fraction frac_scale(const Polynomial& p, const Fraction& u, const LocalizedContext& ctx);

/// g re-expanded over f^k for k >= u.exponent(): the numerator of
/// u = g / f^k, reduced modulo J.
Polynomial numerator_over(const Fraction& u, unsigned k, const LocalizedContext& ctx);

/// x_i d_i^[t](u) through the quotient rule
///   x d^[t](g/f^j) = (1/f^j) x d^[t](g) - sum_{s=1..t} (1/f^j) d^[s](f^j) x d^[t-s](g/f^j),
/// with x d^[0] = multiplication by x.
Fraction act(std::size_t i, unsigned t, const Fraction& u, const LocalizedContext& ctx);

/// K-linear extension: each term x^a d^[t] is factored as
/// x^(a - 1_t) prod_{i in supp t} x_i d_i^[t_i]. Throws std::domain_error for
/// a term with supp(t) not inside supp(a).
Fraction act(const DiffOp& op, const Fraction& u, const LocalizedContext& ctx);

}  // namespace srdmod
