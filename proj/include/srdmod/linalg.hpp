#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "srdmod/scalar.hpp"

namespace srdmod {

/// Sparse vector over a field, keyed by column index; no zero entries.
using SparseVector = std::map<std::uint64_t, Scalar>;

/// v += c * w, dropping entries that cancel.
void axpy(SparseVector& v, const Scalar& c, const SparseVector& w);

/// Incremental row echelon form over a field. Every stored row is monic at
/// its pivot, the smallest column it touches, and pivots are distinct.
/// Reduction clears every pivot column of the input, so the residue is the
/// canonical representative of v modulo the span.
class SparseEchelon {
 public:
  explicit SparseEchelon(Field k) : field_(k) {}

  Field field() const { return field_; }
  std::size_t rank() const { return rows_.size(); }

  SparseVector reduce(SparseVector v) const;
  bool in_span(const SparseVector& v) const { return reduce(v).empty(); }

  /// Adds v to the span; returns false when it was already there.
  bool insert(const SparseVector& v);

 private:
  Field field_;
  std::map<std::uint64_t, SparseVector> rows_;  // pivot column -> row
};

/// Rank of a family of sparse vectors.
std::size_t rank(Field k, const std::vector<SparseVector>& vectors);

}  // namespace srdmod
