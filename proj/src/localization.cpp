#include "srdmod/localization.hpp"

#include <algorithm>
#include <stdexcept>

#include "srdmod/sralgebra.hpp"

namespace srdmod {

namespace {

std::vector<VertexSet> minimalize(std::vector<VertexSet> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<VertexSet> out;
  for (VertexSet g : gens)
    if (std::none_of(out.begin(), out.end(), [&](VertexSet h) { return h.is_subset_of(g); }))
      out.push_back(g);
  return out;
}

Polynomial divide_by_monomial(const Polynomial& p, const ExponentVector& e) {
  Polynomial q(p.field(), p.nvars());
  for (const auto& [m, c] : p.terms()) q.add_term(m - e, c);
  return q;
}

bool divisible_by_monomial(const Polynomial& p, const ExponentVector& e) {
  return std::all_of(p.terms().begin(), p.terms().end(), [&](const auto& kv) { return e.divides(kv.first); });
}

}  // namespace

LocalizedContext LocalizedContext::saturate(std::shared_ptr<const SimplicialComplex> cx, Field k,
                                            const ExponentVector& f) {
  if (f.size() != cx->num_vertices())
    throw std::invalid_argument("monomial has " + std::to_string(f.size()) + " variables, complex has " +
                                std::to_string(cx->num_vertices()));
  const VertexSet fs = f.support();
  LocalizedContext ctx(cx, Polynomial::monomial(k, f));

  // Iterated colon of the squarefree ideal by f: x^G : f = x^(G - supp f).
  std::vector<VertexSet> cur = face_ideal_generators(*cx);
  for (;;) {
    std::vector<VertexSet> next;
    for (VertexSet g : cur) next.push_back(g - fs);
    next = minimalize(next);
    if (next == cur) break;
    cur = std::move(next);
    ++ctx.sat_exponent_;
  }
  if (!cur.empty() && cur.front().empty())
    throw std::domain_error("f = " + f.to_string(cx->labels()) + " is zero in the Stanley-Reisner ring");
  ctx.j_gens_ = std::move(cur);
  return ctx;
}

LocalizedContext LocalizedContext::over_polynomial_ring(std::shared_ptr<const SimplicialComplex> cx,
                                                        const Polynomial& f) {
  if (!cx->is_full_simplex() && cx->num_vertices() > 0)
    throw std::domain_error("non-monomial denominators are supported only when the face ideal is zero");
  if (f.is_zero()) throw std::domain_error("cannot localize at zero");
  if (f.nvars() != cx->num_vertices()) throw std::invalid_argument("denominator has the wrong number of variables");
  return LocalizedContext(std::move(cx), f);
}

bool LocalizedContext::in_saturation(const ExponentVector& e) const {
  const VertexSet s = e.support();
  return std::any_of(j_gens_.begin(), j_gens_.end(), [&](VertexSet g) { return g.is_subset_of(s); });
}

Polynomial LocalizedContext::reduce(const Polynomial& p) const {
  if (j_gens_.empty()) return p;
  Polynomial r(p.field(), p.nvars());
  for (const auto& [e, c] : p.terms())
    if (!in_saturation(e)) r.add_term(e, c);
  return r;
}

std::string LocalizedContext::describe() const {
  std::string s = "R_f with f = " + f_.to_string(cx_->labels()) + ", J = (";
  for (std::size_t i = 0; i < j_gens_.size(); ++i) {
    if (i) s += ", ";
    s += ExponentVector::indicator(nvars(), j_gens_[i]).to_string(cx_->labels());
  }
  return s + ")";
}

Fraction::Fraction(const LocalizedContext& ctx, Polynomial g, unsigned k) : g_(ctx.reduce(g)), k_(k) {
  if (g_.nvars() != ctx.nvars() || !(g_.field() == ctx.field()))
    throw std::invalid_argument("numerator does not live in the ambient ring");
  if (g_.is_zero()) {
    k_ = 0;
    return;
  }
  if (ctx.monomial_f()) {
    const ExponentVector& fe = ctx.f().terms().begin()->first;
    const Scalar fc = ctx.f().terms().begin()->second;
    while (k_ > 0 && divisible_by_monomial(g_, fe)) {
      g_ = divide_by_monomial(g_, fe) * fc.inverse();
      --k_;
    }
    return;
  }
  while (k_ > 0) {
    auto q = g_.divide_exact(ctx.f());
    if (!q) break;
    g_ = std::move(*q);
    --k_;
  }
}

std::string Fraction::to_string(const LocalizedContext& ctx) const {
  const auto& labels = ctx.complex().labels();
  std::string num = g_.to_string(labels);
  if (k_ == 0) return num;
  if (g_.size() > 1) num = "(" + num + ")";
  if (ctx.monomial_f() && ctx.f().terms().begin()->second.is_one()) {
    ExponentVector e(ctx.nvars());
    for (unsigned i = 0; i < k_; ++i) e += ctx.f().terms().begin()->first;
    return num + "/" + e.to_string(labels);
  }
  std::string den = "(" + ctx.f().to_string(labels) + ")";
  if (k_ > 1) den += "^" + std::to_string(k_);
  return num + "/" + den;
}

Polynomial numerator_over(const Fraction& u, unsigned k, const LocalizedContext& ctx) {
  if (k < u.exponent()) throw std::invalid_argument("cannot lower the denominator exponent");
  return ctx.reduce(u.numerator() * ctx.f().pow(k - u.exponent()));
}

bool frac_equal(const Fraction& u, const Fraction& v, const LocalizedContext& ctx) {
  return ctx.reduce(u.numerator() * ctx.f().pow(v.exponent())) ==
         ctx.reduce(v.numerator() * ctx.f().pow(u.exponent()));
}

Fraction frac_add(const Fraction& u, const Fraction& v, const LocalizedContext& ctx) {
  const unsigned k = std::max(u.exponent(), v.exponent());
  return Fraction(ctx, numerator_over(u, k, ctx) + numerator_over(v, k, ctx), k);
}

Fraction frac_scale(const Polynomial& p, const Fraction& u, const LocalizedContext& ctx) {
  return Fraction(ctx, p * u.numerator(), u.exponent());
}

Fraction act(std::size_t i, unsigned t, const Fraction& u, const LocalizedContext& ctx) {
  if (i >= ctx.nvars()) throw std::out_of_range("variable index out of range");
  const Field k = ctx.field();
  const std::size_t n = ctx.nvars();
  const Polynomial xi = Polynomial::variable(k, n, i);
  const Polynomial& g = u.numerator();
  const unsigned j = u.exponent();
  const Polynomial fj = ctx.f().pow(j);

  // a[s] = x_i d_i^[s](g / f^j)
  std::vector<Fraction> a;
  a.emplace_back(ctx, xi * g, j);
  for (unsigned tt = 1; tt <= t; ++tt) {
    Fraction cur(ctx, xi * g.divided_partial(i, tt), j);
    for (unsigned s = 1; s <= tt; ++s) {
      const Polynomial dfj = fj.divided_partial(i, s);
      if (dfj.is_zero()) continue;
      const Fraction& prev = a[tt - s];
      cur = frac_add(cur, Fraction(ctx, -(dfj * prev.numerator()), prev.exponent() + j), ctx);
    }
    a.push_back(std::move(cur));
  }
  return a[t];
}

Fraction act(const DiffOp& op, const Fraction& u, const LocalizedContext& ctx) {
  if (op.nvars() != ctx.nvars() || !(op.field() == ctx.field()))
    throw std::invalid_argument("operator does not act on this ring");
  const Field k = ctx.field();
  const std::size_t n = ctx.nvars();
  Fraction out(ctx, Polynomial(k, n), 0);
  for (const auto& [m, c] : op.terms()) {
    const VertexSet st = m.t.support();
    if (!st.is_subset_of(m.a.support()))
      throw std::domain_error("term " + m.to_string(ctx.complex().labels()) +
                              " is not a product of x_i d_i^[t] generators");
    Fraction v = u;
    for (unsigned i : st.members()) v = act(i, m.t[i], v, ctx);
    const ExponentVector rest = m.a - ExponentVector::indicator(n, st);
    out = frac_add(out, frac_scale(Polynomial::monomial(k, rest, c), v, ctx), ctx);
  }
  return out;
}

}  // namespace srdmod
