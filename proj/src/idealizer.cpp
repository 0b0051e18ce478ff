#include "srdmod/idealizer.hpp"

#include <algorithm>
#include <stdexcept>

namespace srdmod {

bool traves_member(const ExponentVector& a, const ExponentVector& t, const SimplicialComplex& cx) {
  // With P the complement of a facet H: x^a in P iff supp(a) is not inside H,
  // and x^t not in P iff supp(t) is inside H.
  const VertexSet sa = a.support(), st = t.support();
  for (VertexSet h : cx.facets())
    if (sa.is_subset_of(h) && !st.is_subset_of(h)) return false;
  return true;
}

bool is_dr_basis_monomial(const OperatorMonomial& m, const SimplicialComplex& cx) {
  return cx.is_face(m.a.support()) && traves_member(m.a, m.t, cx);
}

std::vector<OperatorMonomial> dr_basis_up_to(const SimplicialComplex& cx, unsigned max_degree) {
  const std::size_t n = cx.num_vertices();
  std::vector<OperatorMonomial> out;
  for_each_exponent_up_to(n, max_degree, [&](const ExponentVector& a) {
    if (!cx.is_face(a.support())) return;
    const auto rest = static_cast<unsigned>(max_degree - a.degree());
    for_each_exponent_up_to(n, rest, [&](const ExponentVector& t) {
      if (traves_member(a, t, cx)) out.push_back({a, t});
    });
  });
  std::sort(out.begin(), out.end());
  return out;
}

XdelxResult verify_xdelx(const SimplicialComplex& cx, unsigned max_degree) {
  XdelxResult res;
  if (is_t_space(cx) != TSpaceVerdict::yes) return res;
  const auto basis = dr_basis_up_to(cx, max_degree);
  res.basis_size = basis.size();

  std::vector<OperatorMonomial> family;
  const std::size_t n = cx.num_vertices();
  for_each_exponent_up_to(n, max_degree, [&](const ExponentVector& a) {
    if (!cx.is_face(a.support())) return;
    const auto rest = static_cast<unsigned>(max_degree - a.degree());
    for_each_exponent_up_to(n, rest, [&](const ExponentVector& t) {
      if (t.support().is_subset_of(a.support())) family.push_back({a, t});
    });
  });
  std::sort(family.begin(), family.end());

  res.verdict = Verdict::pass;
  auto i = basis.begin();
  auto j = family.begin();
  while (i != basis.end() || j != family.end()) {
    if (j == family.end() || (i != basis.end() && *i < *j)) {
      res.verdict = Verdict::fail;
      res.mismatch = *i;
      res.mismatch_in_basis = true;
      break;
    }
    if (i == basis.end() || *j < *i) {
      res.verdict = Verdict::fail;
      res.mismatch = *j;
      break;
    }
    ++i;
    ++j;
  }
  return res;
}

DROperator::DROperator(std::shared_ptr<const SimplicialComplex> cx, const DiffOp& op)
    : cx_(std::move(cx)), op_(op.field(), op.nvars()) {
  if (op.nvars() != cx_->num_vertices())
    throw std::invalid_argument("operator has " + std::to_string(op.nvars()) +
                                " variables, complex has " + std::to_string(cx_->num_vertices()));
  for (const auto& [m, c] : op.terms()) {
    if (!cx_->is_face(m.a.support())) continue;
    if (!traves_member(m.a, m.t, *cx_))
      throw std::domain_error("term " + m.to_string(cx_->labels()) +
                              " does not preserve the face ideal");
    op_.add_term(m, c);
  }
}

DROperator DROperator::identity(std::shared_ptr<const SimplicialComplex> cx, Field k) {
  const std::size_t n = cx->num_vertices();
  return DROperator(std::move(cx), DiffOp::identity(k, n));
}

DROperator compose_dr(const DROperator& u, const DROperator& v) {
  if (!(u.complex() == v.complex()))
    throw std::invalid_argument("operators belong to different complexes");
  return DROperator(u.complex_ptr(), compose(u.op(), v.op()));
}

}  // namespace srdmod
