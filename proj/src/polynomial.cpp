#include "srdmod/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace srdmod {

Polynomial Polynomial::constant(Field k, std::size_t nvars, const Scalar& c) {
  Polynomial p(k, nvars);
  p.add_term(ExponentVector(nvars), c);
  return p;
}

Polynomial Polynomial::monomial(Field k, const ExponentVector& e, const Scalar& c) {
  Polynomial p(k, e.size());
  p.add_term(e, c);
  return p;
}

Polynomial Polynomial::variable(Field k, std::size_t nvars, std::size_t i) {
  return monomial(k, ExponentVector::unit(nvars, i));
}

long Polynomial::degree() const {
  long d = -1;
  for (const auto& [e, c] : terms_) d = std::max<long>(d, static_cast<long>(e.degree()));
  return d;
}

Scalar Polynomial::coefficient(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void Polynomial::add_term(const ExponentVector& e, const Scalar& c) {
  if (e.size() != nvars_)
    throw std::invalid_argument("exponent vector length " + std::to_string(e.size()) +
                                " does not match " + std::to_string(nvars_) + " variables");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (!(field_ == o.field_) || nvars_ != o.nvars_)
    throw std::invalid_argument("polynomials live in different rings");
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial r(a.field_, a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r = constant(field_, nvars_, Scalar::one(field_));
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

Polynomial Polynomial::shifted(const ExponentVector& e) const {
  Polynomial r(field_, nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m + e, c);
  return r;
}

Polynomial Polynomial::divided_partial(std::size_t i, unsigned s) const {
  Polynomial r(field_, nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] < s) continue;
    ExponentVector m = e;
    m[i] -= s;
    r.add_term(m, c * Scalar(field_, binomial(e[i], s)));
  }
  return r;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& d) const {
  check_compatible(d);
  if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
  const auto& [lead_e, lead_c] = *d.terms_.rbegin();
  const Scalar lead_inv = lead_c.inverse();
  Polynomial rem = *this;
  Polynomial quot(field_, nvars_);
  while (!rem.is_zero()) {
    const auto [re, rc] = *rem.terms_.rbegin();
    if (!lead_e.divides(re)) return std::nullopt;
    const ExponentVector qe = re - lead_e;
    const Scalar qc = rc * lead_inv;
    quot.add_term(qe, qc);
    rem -= d.shifted(qe) * qc;
  }
  return quot;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.field_ == b.field_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

std::string render_sum(const std::vector<std::pair<Scalar, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& [c, mono] : terms) {
    const bool negative = c.field().is_rational() && sgn(c.to_rational()) < 0;
    const Scalar mag = negative ? -c : c;
    if (s.empty())
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    if (mono == "1")
      s += mag.to_string();
    else if (mag.is_one())
      s += mono;
    else
      s += mag.to_string() + "*" + mono;
  }
  return s;
}

std::string Polynomial::to_string(const std::vector<std::string>& labels) const {
  std::vector<const Terms::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [](auto* x, auto* y) { return deglex_greater(x->first, y->first); });
  std::vector<std::pair<Scalar, std::string>> parts;
  for (auto* t : order) parts.emplace_back(t->second, t->first.to_string(labels));
  return render_sum(parts);
}

}  // namespace srdmod
