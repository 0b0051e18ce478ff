#include "srdmod/linalg.hpp"

namespace srdmod {

void axpy(SparseVector& v, const Scalar& c, const SparseVector& w) {
  if (c.is_zero()) return;
  for (const auto& [k, x] : w) {
    auto [it, inserted] = v.try_emplace(k, c * x);
    if (!inserted) {
      it->second += c * x;
      if (it->second.is_zero()) v.erase(it);
    }
  }
}

SparseVector SparseEchelon::reduce(SparseVector v) const {
  // Eliminating with the row of pivot p only touches columns >= p, so one
  // ascending sweep clears every pivot column.
  auto it = v.begin();
  while (it != v.end()) {
    const auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    const std::uint64_t col = it->first;
    axpy(v, -it->second, row->second);
    it = v.upper_bound(col);
  }
  return v;
}

bool SparseEchelon::insert(const SparseVector& v) {
  SparseVector r = reduce(v);
  if (r.empty()) return false;
  const Scalar inv = r.begin()->second.inverse();
  for (auto& [k, x] : r) x *= inv;
  const std::uint64_t pivot = r.begin()->first;
  rows_.emplace(pivot, std::move(r));
  return true;
}

std::size_t rank(Field k, const std::vector<SparseVector>& vectors) {
  SparseEchelon e(k);
  for (const auto& v : vectors) e.insert(v);
  return e.rank();
}

}  // namespace srdmod
