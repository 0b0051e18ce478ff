#include "srdmod/ddm.hpp"

#include <algorithm>
#include <stdexcept>

namespace srdmod {

RationalPoint::RationalPoint(std::shared_ptr<const SimplicialComplex> cx, std::vector<Scalar> coords)
    : cx_(std::move(cx)), c_(std::move(coords)) {
  if (c_.size() != cx_->num_vertices())
    throw std::invalid_argument("point has " + std::to_string(c_.size()) +
                                " coordinates, complex has " + std::to_string(cx_->num_vertices()) +
                                " vertices");
  if (!c_.empty()) field_ = c_.front().field();
  for (const Scalar& s : c_)
    if (!(s.field() == field_)) throw std::invalid_argument("point coordinates in different fields");
  if (!cx_->is_face(support()))
    throw std::domain_error("support " + support().to_string(cx_->labels()) +
                            " of the point is not a face");
}

VertexSet RationalPoint::support() const {
  VertexSet s;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) s = s.with(static_cast<unsigned>(i));
  return s;
}

std::string RationalPoint::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < c_.size(); ++i) s += (i ? "," : "") + c_[i].to_string();
  return s + ")";
}

OperatorMonomial bracket_monomial(const ExponentVector& b, const ExponentVector& t) {
  return {b + ExponentVector::indicator(t.size(), t.support()), t};
}

bool DdmElement::is_scalar() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& kv) { return kv.first.is_zero(); });
}

Scalar DdmElement::coefficient(const ExponentVector& t) const {
  auto it = coeffs_.find(t);
  return it == coeffs_.end() ? Scalar::zero(field_) : it->second;
}

void DdmElement::add_term(const ExponentVector& t, const Scalar& c) {
  if (t.size() != nvars_) throw std::invalid_argument("coordinate of the wrong length");
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

DdmElement& DdmElement::operator+=(const DdmElement& o) {
  for (const auto& [t, c] : o.coeffs_) add_term(t, c);
  return *this;
}

std::string DdmElement::to_string(const std::vector<std::string>& labels) const {
  std::vector<std::pair<Scalar, std::string>> parts;
  for (const auto& [t, c] : coeffs_) {
    const auto m = bracket_monomial(ExponentVector(nvars_), t).to_string(labels);
    parts.emplace_back(c, "<" + m + ">");
  }
  return render_sum(parts);
}

std::vector<BracketTerm> cong_step(const ExponentVector& b, const ExponentVector& t, std::size_t i,
                                   const RationalPoint& c) {
  if (b[i] == 0) throw std::invalid_argument("cong_step needs b_i >= 1");
  const Field k = c.field();
  const std::size_t n = b.size();
  const ExponentVector ei = ExponentVector::unit(n, i);
  std::vector<BracketTerm> out;
  if (!c[i].is_zero()) out.push_back({b - ei, t, c[i]});
  if (t[i] >= 2)
    out.push_back({b - ei, t - ei, -Scalar::one(k)});
  else if (t[i] == 1)
    out.push_back({b, t - ei, -Scalar::one(k)});
  return out;
}

namespace {

class Reducer {
 public:
  explicit Reducer(const RationalPoint& c) : c_(c) {}

  const DdmElement& reduce(const ExponentVector& b, const ExponentVector& t) {
    const auto key = std::make_pair(b, t);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    DdmElement out(c_.field(), b.size());
    if (c_.complex().is_face(b.support() | t.support())) {
      std::size_t i = 0;
      while (i < b.size() && b[i] == 0) ++i;
      if (i == b.size()) {
        out.add_term(t, Scalar::one(c_.field()));
      } else {
        for (const BracketTerm& term : cong_step(b, t, i, c_)) {
          const DdmElement sub = reduce(term.b, term.t);
          for (const auto& [tt, v] : sub.coeffs()) out.add_term(tt, term.coef * v);
        }
      }
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  const RationalPoint& c_;
  std::map<std::pair<ExponentVector, ExponentVector>, DdmElement> memo_;
};

}  // namespace

DdmElement normal_form(const DROperator& op, const RationalPoint& c) {
  if (!(op.complex() == c.complex())) throw std::invalid_argument("operator and point on different complexes");
  if (!(op.field() == c.field())) throw std::invalid_argument("operator and point over different fields");
  Reducer r(c);
  DdmElement out(c.field(), c.nvars());
  for (const auto& [m, coef] : op.op().terms()) {
    if (!m.t.support().is_subset_of(m.a.support()))
      throw std::domain_error("term " + m.to_string(c.complex().labels()) +
                              " has derivatives outside the support of its x-part");
    const ExponentVector b = m.a - ExponentVector::indicator(m.a.size(), m.t.support());
    for (const auto& [t, v] : r.reduce(b, m.t).coeffs()) out.add_term(t, coef * v);
  }
  return out;
}

DiffOp to_operator(const DdmElement& w) {
  DiffOp op(w.field(), w.nvars());
  for (const auto& [t, c] : w.coeffs()) op.add_term(bracket_monomial(ExponentVector(w.nvars()), t), c);
  return op;
}

namespace {

bool strictly_below(const ExponentVector& s, const ExponentVector& t) { return s != t && s.divides(t); }

}  // namespace

std::variant<RingElement, FailureWitness> find_inverse(const DdmElement& w, const RationalPoint& c) {
  if (w.is_scalar()) throw std::invalid_argument("element is a scalar; no inverse is sought");
  const Field k = c.field();
  const std::size_t n = c.nvars();

  std::optional<ExponentVector> best;
  for (const auto& [t, coef] : w.coeffs()) {
    const bool maximal = std::none_of(w.coeffs().begin(), w.coeffs().end(),
                                      [&](const auto& kv) { return strictly_below(t, kv.first); });
    if (maximal && (!best || *best < t)) best = t;
  }
  const ExponentVector& tl = *best;

  Polynomial g = Polynomial::constant(k, n, Scalar::one(k));
  for (std::size_t i = 0; i < n; ++i) {
    if (!tl[i]) continue;
    Polynomial lin = Polynomial::variable(k, n, i);
    lin -= Polynomial::constant(k, n, c[i]);
    g = g * lin.pow(tl[i]);
  }

  const auto cx = c.complex_ptr();
  auto reduce_product = [&](const Polynomial& f) {
    return normal_form(DROperator(cx, compose(DiffOp::multiplication(f), to_operator(w))), c);
  };
  DdmElement gw = reduce_product(g);
  const Scalar lambda = gw.coefficient(ExponentVector(n));
  if (!gw.is_scalar() || lambda.is_zero()) return FailureWitness{w, c.coords(), tl, g, gw};

  const Polynomial f = g * lambda.inverse();
  DdmElement one(k, n);
  one.add_term(ExponentVector(n), Scalar::one(k));
  if (!(reduce_product(f) == one)) throw std::logic_error("inverse failed to verify");
  return StanleyReisnerRing(*cx, k).reduce(f);
}

DmSpan::DmSpan(const RationalPoint& c, unsigned max_degree)
    : cx_(c.complex_ptr()), max_degree_(max_degree), echelon_(c.field()) {
  const auto& cx = c.complex();
  const std::size_t n = c.nvars();
  const Field k = c.field();
  auto basis = dr_basis_up_to(cx, max_degree);
  std::stable_sort(basis.begin(), basis.end(),
                   [](const OperatorMonomial& a, const OperatorMonomial& b) { return a.degree() > b.degree(); });
  for (std::size_t i = 0; i < basis.size(); ++i) columns_.emplace(basis[i], i);

  if (max_degree == 0) return;
  for (const OperatorMonomial& g : basis) {
    if (g.degree() >= max_degree) continue;
    const DiffOp gop = DiffOp::monomial(k, g);
    for (std::size_t j = 0; j < n; ++j) {
      Polynomial lin = Polynomial::variable(k, n, j);
      lin -= Polynomial::constant(k, n, c[j]);
      echelon_.insert(coordinates(compose(gop, DiffOp::multiplication(lin))));
    }
  }
}

SparseVector DmSpan::coordinates(const DiffOp& op) const {
  if (!(op.field() == echelon_.field())) throw std::invalid_argument("operator over the wrong field");
  SparseVector v;
  for (const auto& [m, coef] : op.terms()) {
    if (!cx_->is_face(m.a.support())) continue;
    auto it = columns_.find(m);
    if (it == columns_.end())
      throw std::out_of_range("term " + m.to_string(cx_->labels()) +
                              " is outside the truncated basis");
    v.emplace(it->second, coef);
  }
  return v;
}

namespace {

constexpr std::uint64_t kTagBase = std::uint64_t{1} << 40;

std::vector<ExponentVector> face_orders_up_to(const SimplicialComplex& cx, unsigned max_order) {
  std::vector<ExponentVector> out;
  for_each_exponent_up_to(cx.num_vertices(), max_order, [&](const ExponentVector& t) {
    if (cx.is_face(t.support())) out.push_back(t);
  });
  return out;
}

}  // namespace

RankCheck basis_rank_check(const RationalPoint& c, unsigned max_order) {
  RankCheck res;
  res.truncation = 2 * max_order + 2;
  const DmSpan span(c, res.truncation);
  SparseEchelon e = span.echelon();
  const auto ts = face_orders_up_to(c.complex(), max_order);
  const std::size_t n = c.nvars();
  res.count = ts.size();
  for (std::size_t idx = 0; idx < ts.size(); ++idx) {
    const auto m = bracket_monomial(ExponentVector(n), ts[idx]);
    SparseVector v = span.coordinates(DiffOp::monomial(c.field(), m));
    v.emplace(kTagBase + idx, Scalar::one(c.field()));
    const SparseVector r = e.reduce(v);
    if (r.begin()->first < kTagBase) {
      e.insert(r);
      ++res.rank;
      continue;
    }
    if (res.verdict == Verdict::pass) {
      res.verdict = Verdict::fail;
      for (const auto& [col, coef] : r) res.dependency.emplace_back(ts[col - kTagBase], coef);
    }
  }
  return res;
}

FiltDimReport filt_dim_check(const RationalPoint& c, unsigned i_max) {
  const auto& cx = c.complex();
  const Field k = c.field();
  FiltDimReport rep;
  rep.h1 = hilbert_data(cx, i_max).h1;
  for (unsigned i = 0; i <= i_max; ++i) rep.order_counts.push_back(face_orders_up_to(cx, i).size());

  const DmSpan span(c, i_max + 2);
  SparseEchelon image = span.echelon();
  const std::size_t base_rank = image.rank();
  SparseEchelon nf_image(k);
  std::map<ExponentVector, std::uint64_t> nf_columns;
  bool nf_ok = true;

  auto basis = dr_basis_up_to(cx, i_max);
  std::stable_sort(basis.begin(), basis.end(),
                   [](const OperatorMonomial& a, const OperatorMonomial& b) { return a.degree() < b.degree(); });
  auto it = basis.begin();
  for (unsigned i = 0; i <= i_max; ++i) {
    for (; it != basis.end() && it->degree() <= i; ++it) {
      const DiffOp op = DiffOp::monomial(k, *it);
      image.insert(span.coordinates(op));
      if (!nf_ok) continue;
      try {
        SparseVector v;
        const DdmElement nf = normal_form(DROperator(c.complex_ptr(), op), c);
        for (const auto& [t, coef] : nf.coeffs()) {
          const auto col = nf_columns.try_emplace(t, nf_columns.size()).first->second;
          v.emplace(col, coef);
        }
        nf_image.insert(v);
      } catch (const std::domain_error&) {
        nf_ok = false;  // operator outside the <t> coordinates (not a T-space)
      }
    }
    rep.dims.push_back(image.rank() - base_rank);
    if (nf_ok) rep.nf_dims.push_back(nf_image.rank());
    if (rep.dims.back() < rep.h1[i]) rep.verdict = Verdict::fail;
  }
  if (!nf_ok) rep.nf_dims.clear();
  return rep;
}

}  // namespace srdmod
