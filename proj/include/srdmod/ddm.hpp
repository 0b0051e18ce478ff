#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "srdmod/idealizer.hpp"
#include "srdmod/linalg.hpp"
#include "srdmod/sralgebra.hpp"

namespace srdmod {

/// A K-rational point c of Spec K[cx], i.e. the maximal ideal (x - c).
/// Valid iff the support of c is a face.
class RationalPoint {
 public:
  /// Throws std::invalid_argument on a length or field mismatch and
  /// std::domain_error when supp(c) is not a face.
  RationalPoint(std::shared_ptr<const SimplicialComplex> cx, std::vector<Scalar> coords);

  const std::vector<Scalar>& coords() const { return c_; }
  const Scalar& operator[](std::size_t i) const { return c_[i]; }
  Field field() const { return field_; }
  std::size_t nvars() const { return c_.size(); }
  VertexSet support() const;
  const SimplicialComplex& complex() const { return *cx_; }
  std::shared_ptr<const SimplicialComplex> complex_ptr() const { return cx_; }
  std::string to_string() const;

 private:
  std::shared_ptr<const SimplicialComplex> cx_;
  Field field_;
  std::vector<Scalar> c_;
};

/// <t> = prod_{i in supp t} x_i d_i^[t_i], as the operator monomial x^(1_t) d^[t];
/// x^b <t> is x^(b + 1_t) d^[t].
OperatorMonomial bracket_monomial(const ExponentVector& b, const ExponentVector& t);

/// Element of D/Dm in the coordinates <t>, supp(t) a face.
class DdmElement {
 public:
  using Coeffs = std::map<ExponentVector, Scalar>;

  DdmElement() = default;
  DdmElement(Field k, std::size_t nvars) : field_(k), nvars_(nvars) {}

  Field field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const Coeffs& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Only the coordinate <0> may be nonzero.
  bool is_scalar() const;
  Scalar coefficient(const ExponentVector& t) const;
  void add_term(const ExponentVector& t, const Scalar& c);

  DdmElement& operator+=(const DdmElement& o);
  friend bool operator==(const DdmElement& a, const DdmElement& b) {
    return a.field_ == b.field_ && a.nvars_ == b.nvars_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string(const std::vector<std::string>& labels) const;

 private:
  Field field_;
  std::size_t nvars_ = 0;
  Coeffs coeffs_;
};

/// One term c * x^b <t> of a congruence.
struct BracketTerm {
  ExponentVector b;
  ExponentVector t;
  Scalar coef;
};

/// One rewrite of x^b <t> modulo Dm, moving a single x_i (b_i >= 1) to the
/// right where it acts as c_i:
///   t_i >= 2:  c_i x^(b-e_i) <t> - x^(b-e_i) <t-e_i>
///   t_i  = 1:  c_i x^(b-e_i) <t> - x^b <t-e_i>
///   t_i  = 0:  c_i x^(b-e_i) <t>
std::vector<BracketTerm> cong_step(const ExponentVector& b, const ExponentVector& t, std::size_t i,
                                   const RationalPoint& c);

/// Image of op in D/Dm by repeated cong_step at the first variable with
/// b_i >= 1. Terms with non-face support vanish. Throws std::domain_error
/// for a term x^a d^[t] with supp(t) not inside supp(a), which has no
/// expression in the <t> coordinates.
DdmElement normal_form(const DROperator& op, const RationalPoint& c);

/// sum_t w_t <t> as an operator.
DiffOp to_operator(const DdmElement& w);

struct FailureWitness {
  DdmElement w;
  std::vector<Scalar> point;
  ExponentVector t_l;
  Polynomial g;
  DdmElement reduced;  // normal_form(g * w), not a nonzero scalar
};

/// Looks for f in m with f w = 1 in D/Dm: picks a maximal t_l among the
/// coordinates of w (lexicographically largest on ties), sets
/// g = (x - c)^(t_l), and returns lambda^-1 g when g w reduces to a nonzero
/// scalar lambda. Throws std::invalid_argument when w is a scalar.
std::variant<RingElement, FailureWitness> find_inverse(const DdmElement& w, const RationalPoint& c);

/// Truncated span of Dm: all g (x_j - c_j) with g a D_R basis monomial of
/// degree < max_degree. Vectors are taken in the D_R monomial basis up to
/// max_degree, higher degrees getting smaller column indices so that
/// residues are pushed towards low degree.
class DmSpan {
 public:
  DmSpan(const RationalPoint& c, unsigned max_degree);

  unsigned max_degree() const { return max_degree_; }
  std::size_t rank() const { return echelon_.rank(); }
  std::size_t num_columns() const { return columns_.size(); }
  const SparseEchelon& echelon() const { return echelon_; }

  /// Coordinates of op after support deletion; std::out_of_range for a term
  /// beyond the truncation or outside the D_R basis.
  SparseVector coordinates(const DiffOp& op) const;
  SparseVector residue(const DiffOp& op) const { return echelon_.reduce(coordinates(op)); }
  bool contains(const DiffOp& op) const { return residue(op).empty(); }

 private:
  std::shared_ptr<const SimplicialComplex> cx_;
  unsigned max_degree_;
  std::map<OperatorMonomial, std::uint64_t> columns_;
  SparseEchelon echelon_;
};

struct RankCheck {
  Verdict verdict = Verdict::pass;
  std::size_t count = 0;  // number of <t> tested
  std::size_t rank = 0;   // rank of their images
  unsigned truncation = 0;
  /// On FAIL: a nontrivial combination sum coef <t> lying in the span.
  std::vector<std::pair<ExponentVector, Scalar>> dependency;
};

/// Independence of {<t> : supp(t) a face, |t| <= B} modulo Dm, against the
/// span truncated at operator degree 2B + 2.
RankCheck basis_rank_check(const RationalPoint& c, unsigned max_order);

struct FiltDimReport {
  Verdict verdict = Verdict::pass;
  /// dims[i]: dim of the image of the Bernstein level F_i, by elimination
  /// against the span truncated at degree i_max + 2.
  std::vector<std::size_t> dims;
  /// Same dimension computed from normal_form coordinates.
  std::vector<std::size_t> nf_dims;
  std::vector<std::uint64_t> h1;
  /// #{t : supp(t) a face, |t| <= i}.
  std::vector<std::uint64_t> order_counts;
};

/// PASS iff dims[i] >= H_1(R, i) for every i <= i_max.
FiltDimReport filt_dim_check(const RationalPoint& c, unsigned i_max);

}  // namespace srdmod
