#include "srdmod/weyl.hpp"

#include <algorithm>
#include <stdexcept>

namespace srdmod {

std::string OperatorMonomial::to_string(const std::vector<std::string>& labels) const {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    if (!s.empty()) s += "*";
    s += i < labels.size() ? labels[i] : "x" + std::to_string(i + 1);
    if (a[i] > 1) s += "^" + std::to_string(a[i]);
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!t[i]) continue;
    if (!s.empty()) s += "*";
    s += "d" + std::to_string(i + 1) + "^[" + std::to_string(t[i]) + "]";
  }
  return s.empty() ? "1" : s;
}

DiffOp DiffOp::monomial(Field k, const OperatorMonomial& m, const Scalar& c) {
  if (m.a.size() != m.t.size()) throw std::invalid_argument("operator monomial length mismatch");
  DiffOp op(k, m.a.size());
  op.add_term(m, c);
  return op;
}

DiffOp DiffOp::identity(Field k, std::size_t nvars) {
  return monomial(k, {ExponentVector(nvars), ExponentVector(nvars)});
}

DiffOp DiffOp::multiplication(const Polynomial& p) {
  DiffOp op(p.field(), p.nvars());
  for (const auto& [e, c] : p.terms()) op.add_term({e, ExponentVector(p.nvars())}, c);
  return op;
}

DiffOp DiffOp::x_dt(Field k, std::size_t nvars, std::size_t i, unsigned t) {
  return monomial(k, {ExponentVector::unit(nvars, i), ExponentVector::unit(nvars, i, t)});
}

Scalar DiffOp::coefficient(const OperatorMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void DiffOp::add_term(const OperatorMonomial& m, const Scalar& c) {
  if (m.a.size() != nvars_ || m.t.size() != nvars_)
    throw std::invalid_argument("operator monomial does not have " + std::to_string(nvars_) +
                                " variables");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void DiffOp::check_compatible(const DiffOp& o) const {
  if (!(field_ == o.field_) || nvars_ != o.nvars_)
    throw std::invalid_argument("operators live in different algebras");
}

DiffOp DiffOp::operator-() const {
  DiffOp r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

DiffOp& DiffOp::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

bool operator==(const DiffOp& a, const DiffOp& b) {
  return a.field_ == b.field_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

long DiffOp::total_degree() const {
  long d = -1;
  for (const auto& [m, c] : terms_) d = std::max<long>(d, static_cast<long>(m.degree()));
  return d;
}

std::string DiffOp::to_string(const std::vector<std::string>& labels) const {
  std::vector<std::pair<Scalar, std::string>> parts;
  for (const auto& [m, c] : terms_) parts.emplace_back(c, m.to_string(labels));
  return render_sum(parts);
}

Polynomial apply(const DiffOp& op, const Polynomial& p) {
  if (!(op.field() == p.field()) || op.nvars() != p.nvars())
    throw std::invalid_argument("operator and polynomial live in different rings");
  const Field k = op.field();
  Polynomial out(k, p.nvars());
  for (const auto& [m, c] : op.terms())
    for (const auto& [v, d] : p.terms()) {
      if (!m.t.divides(v)) continue;
      mpz_class coef = 1;
      for (std::size_t i = 0; i < v.size(); ++i) coef *= binomial(v[i], m.t[i]);
      out.add_term(m.a + (v - m.t), c * d * Scalar(k, coef));
    }
  return out;
}

std::vector<mpz_class> commute_past_power(unsigned s, unsigned b) {
  // coeffs[k] multiplies x^(m-k) d^[s-k] after m factors of x have been moved.
  std::vector<mpz_class> coeffs(std::min(s, b) + 1, 0);
  coeffs[0] = 1;
  for (unsigned m = 0; m < b; ++m) {
    std::vector<mpz_class> next(coeffs.size(), 0);
    for (unsigned k = 0; k < coeffs.size(); ++k) {
      if (coeffs[k] == 0) continue;
      next[k] += coeffs[k];                          // x d^[s-k]
      if (k < s && k + 1 < next.size()) next[k + 1] += coeffs[k];  // d^[s-k-1]
    }
    coeffs = std::move(next);
  }
  return coeffs;
}

namespace {

struct Factor {
  mpz_class coef;
  std::uint32_t x;
  std::uint32_t d;
};

// x^a d^[s] x^b d^[t] in a single variable.
std::vector<Factor> compose_one_variable(std::uint32_t a, std::uint32_t s, std::uint32_t b,
                                         std::uint32_t t) {
  std::vector<Factor> out;
  const auto moved = commute_past_power(s, b);
  for (unsigned k = 0; k < moved.size(); ++k) {
    if (moved[k] == 0) continue;
    // d^[s-k] d^[t] = C(s-k+t, t) d^[s-k+t]
    mpz_class c = moved[k] * binomial(s - k + t, t);
    if (c == 0) continue;
    out.push_back({std::move(c), a + b - k, s - k + t});
  }
  return out;
}

}  // namespace

DiffOp compose(const DiffOp& lhs, const DiffOp& rhs) {
  if (!(lhs.field() == rhs.field()) || lhs.nvars() != rhs.nvars())
    throw std::invalid_argument("operators live in different algebras");
  const Field k = lhs.field();
  const std::size_t n = lhs.nvars();
  DiffOp out(k, n);
  std::vector<std::vector<Factor>> per_var(n);
  for (const auto& [ml, cl] : lhs.terms())
    for (const auto& [mr, cr] : rhs.terms()) {
      for (std::size_t i = 0; i < n; ++i)
        per_var[i] = compose_one_variable(ml.a[i], ml.t[i], mr.a[i], mr.t[i]);
      const Scalar base = cl * cr;
      // Cartesian product over the independent variables.
      OperatorMonomial m{ExponentVector(n), ExponentVector(n)};
      auto emit = [&](auto&& self, std::size_t i, const mpz_class& coef) -> void {
        if (i == n) {
          out.add_term(m, base * Scalar(k, coef));
          return;
        }
        for (const Factor& f : per_var[i]) {
          m.a[i] = f.x;
          m.t[i] = f.d;
          self(self, i + 1, coef * f.coef);
        }
      };
      emit(emit, 0, mpz_class(1));
    }
  return out;
}

DiffOp commutator(const DiffOp& lhs, const DiffOp& rhs) {
  return compose(lhs, rhs) - compose(rhs, lhs);
}

long order(const DiffOp& op) {
  long o = -1;
  for (const auto& [m, c] : op.terms()) o = std::max<long>(o, static_cast<long>(m.t.degree()));
  return o;
}

}  // namespace srdmod
