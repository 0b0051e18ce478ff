#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "srdmod/complex.hpp"
#include "srdmod/verdict.hpp"
#include "srdmod/weyl.hpp"

namespace srdmod {

/// Traves' criterion: x^a d^[t] lies in the idealizer of the face ideal iff
/// for every minimal prime P either x^a is in P or x^t is not in P.
bool traves_member(const ExponentVector& a, const ExponentVector& t, const SimplicialComplex& cx);

/// Nonzero monomials of D_R = idealizer / I D_S: (a, t) with supp(a) a face
/// and Traves membership.
bool is_dr_basis_monomial(const OperatorMonomial& m, const SimplicialComplex& cx);

/// All basis monomials of D_R with |a| + |t| <= max_degree, sorted.
std::vector<OperatorMonomial> dr_basis_up_to(const SimplicialComplex& cx, unsigned max_degree);

struct XdelxResult {
  Verdict verdict = Verdict::not_applicable;
  std::size_t basis_size = 0;
  /// First monomial in the symmetric difference of the two sets, on FAIL.
  std::optional<OperatorMonomial> mismatch;
  /// True when the mismatch lies in the Traves basis but not in the
  /// supp(t) <= supp(a) family.
  bool mismatch_in_basis = false;
};

/// Compares dr_basis_up_to with {(a, t) : supp(t) <= supp(a) face}.
/// Not applicable unless the complex is a T-space.
XdelxResult verify_xdelx(const SimplicialComplex& cx, unsigned max_degree);

/// Element of D_R stored as a filtered D_S normal form: every term is a D_R
/// basis monomial (terms whose x-part has non-face support are deleted).
class DROperator {
 public:
  /// Reduces the x-part modulo the face ideal, then requires every remaining
  /// term to satisfy Traves' criterion; throws std::domain_error otherwise.
  DROperator(std::shared_ptr<const SimplicialComplex> cx, const DiffOp& op);

  static DROperator identity(std::shared_ptr<const SimplicialComplex> cx, Field k);

  const DiffOp& op() const { return op_; }
  const SimplicialComplex& complex() const { return *cx_; }
  std::shared_ptr<const SimplicialComplex> complex_ptr() const { return cx_; }
  Field field() const { return op_.field(); }
  bool is_zero() const { return op_.is_zero(); }

  friend bool operator==(const DROperator& a, const DROperator& b) { return a.op_ == b.op_; }
  std::string to_string() const { return op_.to_string(cx_->labels()); }

 private:
  std::shared_ptr<const SimplicialComplex> cx_;
  DiffOp op_;
};

/// Composition in D_S followed by deletion of terms with non-face x-support.
DROperator compose_dr(const DROperator& u, const DROperator& v);

}  // namespace srdmod
