#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "srdmod/localization.hpp"
#include "srdmod/verdict.hpp"

namespace srdmod {

/// dim F_i: the number of D_R basis monomials of total degree <= i.
std::uint64_t bernstein_dim(const SimplicialComplex& cx, unsigned i);

struct GrowthReport {
  /// "stanley-reisner", or "polynomial-ring" when the face ideal is trivial.
  std::string mode;
  std::vector<std::uint64_t> dims;  // dims[i] = H_1(R, i)
  unsigned r = 0;
  mpq_class C;             // max over 1 <= i <= i_max of dims[i] / i^r
  std::vector<mpz_class> differences;  // r-th finite differences of dims
  mpq_class leading;       // last r-th difference / r!
  mpq_class length_bound;  // C * r!
  Verdict verdict = Verdict::pass;
};

/// Growth data of the filtration G_i = R_0 + ... + R_i. PASS iff the r-th
/// differences are constant and leading >= 1/r!. Not applicable for a
/// complex that is not a T-space. Throws std::invalid_argument when
/// i_max < r + 2.
GrowthReport r_filtration_report(const SimplicialComplex& cx, unsigned i_max);

struct RfWitness {
  std::size_t variable;
  unsigned t;
  unsigned j;
  ExponentVector u;     // spanning element u / f^j
  std::string result;   // the offending image
  unsigned level;       // the level t + 1 + j it should lie in
};

struct RfCheck {
  Verdict verdict = Verdict::pass;
  std::size_t checked = 0;
  std::optional<RfWitness> witness;
};

/// For j <= j_max, t <= t_max and every x_i d_i^[t]: the images of the
/// spanning set {u / f^j : u a monomial of R, deg u <= j (d + 1)} lie in
/// G'_(t+1+j), i.e. re-expand over f^(t+1+j) with numerator degree
/// <= (t+1+j)(d+1). Requires a monomial f.
RfCheck rf_filtration_check(const LocalizedContext& ctx, unsigned j_max, unsigned t_max);

/// Whether x^e / f^k, re-expanded over f^level, has numerator degree at most
/// level (d + 1).
bool in_rf_level(const Fraction& u, unsigned level, const LocalizedContext& ctx);

struct DivisibilityResult {
  Verdict verdict = Verdict::pass;
  std::optional<Polynomial> quotient;  // v with d_x^[s](f^j) = f^(j-s) v
  long degree = -1;
  long bound = 0;                      // s (deg f - 1)
};

/// f^(j-s) divides the divided derivative d_x^[s](f^j), with quotient of
/// degree <= s (deg f - 1). Requires s <= j.
DivisibilityResult divided_derivative_divisibility(const Polynomial& f, unsigned j, unsigned s,
                                                   std::size_t variable);

}  // namespace srdmod
