#include "srdmod/holonomy.hpp"

#include <algorithm>
#include <stdexcept>

#include "srdmod/idealizer.hpp"
#include "srdmod/sralgebra.hpp"

namespace srdmod {

std::uint64_t bernstein_dim(const SimplicialComplex& cx, unsigned i) { return dr_basis_up_to(cx, i).size(); }

GrowthReport r_filtration_report(const SimplicialComplex& cx, unsigned i_max) {
  GrowthReport rep;
  const TSpaceVerdict ts = is_t_space(cx);
  rep.mode = ts == TSpaceVerdict::not_applicable ? "polynomial-ring" : "stanley-reisner";
  const HilbertData hd = hilbert_data(cx, i_max);
  rep.r = hd.r;
  if (i_max < rep.r + 2)
    throw std::invalid_argument("i_max must be at least r + 2 = " + std::to_string(rep.r + 2));
  rep.dims = hd.h1;

  for (unsigned i = 1; i <= i_max; ++i) {
    mpz_class ir;
    mpz_ui_pow_ui(ir.get_mpz_t(), i, rep.r);
    const mpq_class q(mpz_class(static_cast<unsigned long>(rep.dims[i])), ir);
    if (i == 1 || q > rep.C) rep.C = q;
  }
  rep.C.canonicalize();

  std::vector<mpz_class> diff;
  for (auto v : rep.dims) diff.emplace_back(static_cast<unsigned long>(v));
  for (unsigned k = 0; k < rep.r; ++k) {
    std::vector<mpz_class> next;
    for (std::size_t i = 0; i + 1 < diff.size(); ++i) next.push_back(diff[i + 1] - diff[i]);
    diff = std::move(next);
  }
  rep.differences = diff;

  mpz_class rfact;
  mpz_fac_ui(rfact.get_mpz_t(), rep.r);
  rep.leading = mpq_class(diff.back(), rfact);
  rep.leading.canonicalize();
  rep.length_bound = rep.C * rfact;

  const bool constant = std::all_of(diff.begin(), diff.end(), [&](const mpz_class& v) { return v == diff.back(); });
  const bool bounded = rep.leading >= mpq_class(1, rfact);
  if (ts == TSpaceVerdict::no)
    rep.verdict = Verdict::not_applicable;
  else
    rep.verdict = constant && bounded ? Verdict::pass : Verdict::fail;
  return rep;
}

bool in_rf_level(const Fraction& u, unsigned level, const LocalizedContext& ctx) {
  if (u.is_zero()) return true;
  if (u.exponent() > level) return false;
  const Polynomial g = numerator_over(u, level, ctx);
  return g.degree() <= static_cast<long>(level) * static_cast<long>(ctx.d() + 1);
}

RfCheck rf_filtration_check(const LocalizedContext& ctx, unsigned j_max, unsigned t_max) {
  if (!ctx.monomial_f()) throw std::invalid_argument("rf_filtration_check needs a monomial f");
  const auto& cx = ctx.complex();
  const std::size_t n = ctx.nvars();
  const Field k = ctx.field();
  const unsigned d = ctx.d();
  RfCheck res;
  for (unsigned j = 0; j <= j_max; ++j)
    for_each_exponent_up_to(n, j * (d + 1), [&](const ExponentVector& u) {
      if (res.witness || !cx.is_face(u.support())) return;
      const Fraction base(ctx, Polynomial::monomial(k, u), j);
      for (std::size_t i = 0; i < n && !res.witness; ++i)
        for (unsigned t = 0; t <= t_max; ++t) {
          const Fraction img = act(i, t, base, ctx);
          ++res.checked;
          if (!in_rf_level(img, t + 1 + j, ctx)) {
            res.verdict = Verdict::fail;
            res.witness = RfWitness{i, t, j, u, img.to_string(ctx), t + 1 + j};
            break;
          }
        }
    });
  return res;
}

DivisibilityResult divided_derivative_divisibility(const Polynomial& f, unsigned j, unsigned s,
                                                   std::size_t variable) {
  if (s > j) throw std::invalid_argument("need s <= j");
  if (variable >= f.nvars()) throw std::out_of_range("variable index out of range");
  if (f.is_zero()) throw std::invalid_argument("f must be nonzero");
  DivisibilityResult res;
  res.bound = static_cast<long>(s) * (f.degree() - 1);
  const Polynomial num = f.pow(j).divided_partial(variable, s);
  res.quotient = num.divide_exact(f.pow(j - s));
  if (!res.quotient) {
    res.verdict = Verdict::fail;
    return res;
  }
  res.degree = res.quotient->degree();
  if (!res.quotient->is_zero() && res.degree > res.bound) res.verdict = Verdict::fail;
  return res;
}

}  // namespace srdmod
