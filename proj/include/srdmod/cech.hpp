#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "srdmod/complex.hpp"
#include "srdmod/linalg.hpp"

namespace srdmod {

using Multidegree = std::vector<int>;

/// One cell R_g of the Cech complex, g the product of the generators in
/// sigma (a bitmask over the generator list).
struct CechCell {
  std::uint64_t sigma = 0;
  VertexSet support;  // supp(g)
};

/// x^m is a nonzero basis element of (R_g)_m iff m_i >= 0 off supp(g) and
/// supp+(m) u supp(g) is a face.
bool cell_nonzero(const SimplicialComplex& cx, VertexSet g_support, const Multidegree& m);

/// The Cech complex of R in a single multidegree m: each cell is K or 0.
class LocalCechComplex {
 public:
  LocalCechComplex(const SimplicialComplex& cx, const std::vector<ExponentVector>& generators,
                   const Multidegree& m);

  std::size_t length() const { return cells_.size(); }  // s + 1 degrees
  /// Nonzero cells of C^k, as sigma masks.
  const std::vector<std::uint64_t>& cells(std::size_t k) const { return cells_[k]; }
  /// d^k applied to a vector over the cells of C^k (keyed by sigma).
  SparseVector differential(std::size_t k, const SparseVector& v) const;
  /// Keeps only the coordinates of v on nonzero cells of C^k.
  SparseVector restrict_to_cells(std::size_t k, const SparseVector& v) const;

  std::size_t rank(std::size_t k) const;  // rank of d^k
  std::size_t cohomology_dim(std::size_t k) const;
  bool d_squared_zero() const;

  /// Cocycles representing a basis of H^k.
  std::vector<SparseVector> class_representatives(std::size_t k) const;
  bool is_coboundary(std::size_t k, const SparseVector& z) const;

 private:
  std::size_t s_;
  std::vector<std::vector<std::uint64_t>> cells_;
  std::vector<bool> nonzero_;  // indexed by sigma
  Field field_ = Field::rationals();
};

struct CechEntry {
  std::size_t j;
  Multidegree m;
  std::size_t dim;
};

struct CechTable {
  std::vector<ExponentVector> generators;
  int lo = -4;
  int hi = 4;
  /// Nonzero dimensions only, ordered by (j, m).
  std::vector<CechEntry> entries;
  bool d_squared_zero = true;

  std::size_t dim(std::size_t j, const Multidegree& m) const;
};

/// Cohomology of the Cech complex on the monomials f_1..f_s, multidegree by
/// multidegree over the box [lo, hi]^n. An empty generator list gives R in
/// degree 0.
CechTable cech_cohomology(const SimplicialComplex& cx, const std::vector<ExponentVector>& generators,
                          int lo, int hi);

/// Box-bounded heuristic: monomial primes P such that some class of H^j in the
/// box is killed by every variable of P while every monomial supported off P
/// keeps it nonzero (as far as the box reaches). Classes whose multidegree
/// has a neighbour m + e_i outside the box are skipped.
std::vector<VertexSet> candidate_ass_primes(const CechTable& table, const SimplicialComplex& cx,
                                            std::size_t j);

/// Multidegrees of the box in lexicographic order.
std::vector<Multidegree> box_points(std::size_t n, int lo, int hi);

std::string to_string(const Multidegree& m);

}  // namespace srdmod
