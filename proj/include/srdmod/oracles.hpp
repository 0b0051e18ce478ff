#pragma once

// Brute-force reference routines. Each one works from a definition directly
// (subset enumeration, explicit action, calculus) and shares no code path
// with the routine it checks beyond the basic containers.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "srdmod/complex.hpp"
#include "srdmod/polynomial.hpp"

namespace srdmod::oracle {

/// Every face F and every set G with G not inside F are separated.
TSpaceVerdict t_space(const SimplicialComplex& cx);

/// Faces of lk(F), each as a set of vertex labels.
std::set<std::set<std::string>> link_faces(const SimplicialComplex& cx, VertexSet face);

/// Non-faces all of whose proper subsets are faces, by scanning every subset.
std::vector<VertexSet> minimal_non_faces(const SimplicialComplex& cx);

/// Number of exponent vectors of total degree j with face support.
std::uint64_t hilbert(const SimplicialComplex& cx, unsigned j);

/// x^a d^[t] maps every monomial x^v of the face ideal with v_i <= t_i + 1
/// into the face ideal, with coefficients taken in k.
bool idealizer_preserves(const ExponentVector& a, const ExponentVector& t, const SimplicialComplex& cx, Field k);

struct RawFraction {
  Polynomial num;
  unsigned k = 0;  // denominator f^k
};

/// x_i d_i^t (g / f^j) / t! over the rationals, by t first derivatives
/// d(N / f^k) = (dN f - k N df) / f^(k+1).
RawFraction calculus_act(const Polynomial& f, const Polynomial& g, unsigned j, std::size_t i, unsigned t);

/// x^m (m >= 0) is killed by a power of every generator: x^m f_i^(n+1)
/// reduces to zero in the Stanley-Reisner ring.
bool killed_by_generators(const SimplicialComplex& cx, const std::vector<ExponentVector>& gens,
                          const std::vector<int>& m);

/// x^m is nonzero in R_g: clear the negative exponents with a power of g
/// and reduce.
bool localized_monomial_nonzero(const SimplicialComplex& cx, const ExponentVector& g, const std::vector<int>& m);

}  // namespace srdmod::oracle
