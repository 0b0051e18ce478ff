#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "srdmod/complex.hpp"
#include "srdmod/polynomial.hpp"

namespace srdmod {

/// Minimal non-faces of the complex, i.e. the supports of the minimal
/// squarefree monomial generators of the face ideal, in canonical order.
std::vector<VertexSet> face_ideal_generators(const SimplicialComplex& cx);

/// Minimal primes of the face ideal, each given by its set of variables:
/// the complement of a facet. The full simplex yields the single prime {}.
std::vector<VertexSet> minimal_primes(const SimplicialComplex& cx);

/// Krull dimension of K[cx]: the largest facet cardinality.
unsigned krull_dim(const SimplicialComplex& cx);

/// H(R, j) = dim_K R_j, from the f-vector: 1 for j = 0, otherwise
/// sum_s f_{s-1} C(j-1, s-1). Throws std::overflow_error past 64 bits.
std::uint64_t hilbert(const SimplicialComplex& cx, unsigned j);

/// H_1(R, i) = sum_{j <= i} H(R, j).
std::uint64_t iterated_hilbert(const SimplicialComplex& cx, unsigned i);

struct HilbertData {
  std::vector<std::uint64_t> f_vector;  // f_vector[s] counts faces of cardinality s
  std::vector<std::uint64_t> h;         // h[j] = H(R, j)
  std::vector<std::uint64_t> h1;        // h1[i] = H_1(R, i)
  unsigned r = 0;
};

HilbertData hilbert_data(const SimplicialComplex& cx, unsigned max_degree);

class RingElement;

/// The Stanley-Reisner ring K[cx] = S / I_cx.
class StanleyReisnerRing {
 public:
  StanleyReisnerRing(SimplicialComplex cx, Field k);

  const SimplicialComplex& complex() const { return *cx_; }
  std::shared_ptr<const SimplicialComplex> complex_ptr() const { return cx_; }
  Field field() const { return field_; }
  std::size_t nvars() const { return cx_->num_vertices(); }

  /// Normal form of a polynomial of S: monomials whose support is not a face
  /// are deleted.
  RingElement reduce(const Polynomial& p) const;
  RingElement zero() const;
  RingElement one() const;
  RingElement variable(std::size_t i) const;

  /// x^e lies in the face ideal iff its support is not a face.
  bool in_face_ideal(const ExponentVector& e) const { return !cx_->is_face(e.support()); }

 private:
  std::shared_ptr<const SimplicialComplex> cx_;
  Field field_;
};

/// Element of K[cx] in monomial normal form: every stored monomial has face
/// support.
class RingElement {
 public:
  const Polynomial& polynomial() const { return poly_; }
  const SimplicialComplex& complex() const { return *cx_; }
  bool is_zero() const { return poly_.is_zero(); }

  RingElement operator-() const;
  friend RingElement operator+(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a, const RingElement& b);
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  friend RingElement operator*(const Scalar& c, const RingElement& a);
  friend bool operator==(const RingElement& a, const RingElement& b) { return a.poly_ == b.poly_; }

  std::string to_string() const { return poly_.to_string(cx_->labels()); }

 private:
  friend class StanleyReisnerRing;
  RingElement(std::shared_ptr<const SimplicialComplex> cx, Polynomial p)
      : cx_(std::move(cx)), poly_(std::move(p)) {}

  std::shared_ptr<const SimplicialComplex> cx_;
  Polynomial poly_;
};

/// Support deletion on a bare polynomial.
Polynomial reduce_mod_face_ideal(const SimplicialComplex& cx, const Polynomial& p);

}  // namespace srdmod
