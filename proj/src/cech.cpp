#include "srdmod/cech.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace srdmod {

namespace {

constexpr std::uint64_t kTagBase = std::uint64_t{1} << 40;

}  // namespace

bool cell_nonzero(const SimplicialComplex& cx, VertexSet g_support, const Multidegree& m) {
  VertexSet s = g_support;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const auto v = static_cast<unsigned>(i);
    if (m[i] < 0 && !g_support.contains(v)) return false;
    if (m[i] != 0) s = s.with(v);
  }
  return cx.is_face(s);
}

LocalCechComplex::LocalCechComplex(const SimplicialComplex& cx, const std::vector<ExponentVector>& generators,
                                   const Multidegree& m)
    : s_(generators.size()), cells_(generators.size() + 1) {
  if (s_ > 20) throw std::length_error("too many Cech generators");
  if (m.size() != cx.num_vertices()) throw std::invalid_argument("multidegree has the wrong length");
  const std::uint64_t count = std::uint64_t{1} << s_;
  nonzero_.assign(count, false);
  for (std::uint64_t sigma = 0; sigma < count; ++sigma) {
    VertexSet supp;
    for (std::size_t i = 0; i < s_; ++i)
      if ((sigma >> i) & 1u) supp = supp | generators[i].support();
    if (!cell_nonzero(cx, supp, m)) continue;
    nonzero_[sigma] = true;
    cells_[static_cast<std::size_t>(std::popcount(sigma))].push_back(sigma);
  }
}

SparseVector LocalCechComplex::restrict_to_cells(std::size_t k, const SparseVector& v) const {
  SparseVector out;
  for (const auto& [sigma, c] : v)
    if (static_cast<std::size_t>(std::popcount(sigma)) == k && nonzero_[sigma]) out.emplace(sigma, c);
  return out;
}

SparseVector LocalCechComplex::differential(std::size_t k, const SparseVector& v) const {
  SparseVector out;
  for (const auto& [sigma, c] : restrict_to_cells(k, v))
    for (std::size_t j = 0; j < s_; ++j) {
      if ((sigma >> j) & 1u) continue;
      const std::uint64_t tau = sigma | (std::uint64_t{1} << j);
      if (!nonzero_[tau]) continue;
      const bool odd = std::popcount(sigma & ((std::uint64_t{1} << j) - 1)) % 2;
      axpy(out, odd ? -c : c, SparseVector{{tau, Scalar::one(field_)}});
    }
  return out;
}

std::size_t LocalCechComplex::rank(std::size_t k) const {
  if (k >= s_) return 0;
  SparseEchelon e(field_);
  for (std::uint64_t sigma : cells_[k]) e.insert(differential(k, {{sigma, Scalar::one(field_)}}));
  return e.rank();
}

std::size_t LocalCechComplex::cohomology_dim(std::size_t k) const {
  return cells_[k].size() - rank(k) - (k > 0 ? rank(k - 1) : 0);
}

bool LocalCechComplex::d_squared_zero() const {
  for (std::size_t k = 0; k + 2 <= s_; ++k)
    for (std::uint64_t sigma : cells_[k])
      if (!differential(k + 1, differential(k, {{sigma, Scalar::one(field_)}})).empty()) return false;
  return true;
}

bool LocalCechComplex::is_coboundary(std::size_t k, const SparseVector& z) const {
  const SparseVector zz = restrict_to_cells(k, z);
  if (zz.empty()) return true;
  if (k == 0) return false;
  SparseEchelon e(field_);
  for (std::uint64_t sigma : cells_[k - 1]) e.insert(differential(k - 1, {{sigma, Scalar::one(field_)}}));
  return e.in_span(zz);
}

std::vector<SparseVector> LocalCechComplex::class_representatives(std::size_t k) const {
  // Kernel of d^k: tag each cell and collect the combinations whose image
  // eliminates to zero.
  SparseEchelon kernel(field_);
  std::vector<SparseVector> cocycles;
  const auto& ck = cells_[k];
  for (std::size_t idx = 0; idx < ck.size(); ++idx) {
    SparseVector v = differential(k, {{ck[idx], Scalar::one(field_)}});
    v.emplace(kTagBase + idx, Scalar::one(field_));
    const SparseVector r = kernel.reduce(v);
    if (r.begin()->first < kTagBase) {
      kernel.insert(r);
      continue;
    }
    SparseVector z;
    for (const auto& [col, c] : r) z.emplace(ck[col - kTagBase], c);
    cocycles.push_back(std::move(z));
  }
  SparseEchelon classes(field_);
  if (k > 0)
    for (std::uint64_t sigma : cells_[k - 1]) classes.insert(differential(k - 1, {{sigma, Scalar::one(field_)}}));
  std::vector<SparseVector> reps;
  for (auto& z : cocycles)
    if (classes.insert(z)) reps.push_back(std::move(z));
  return reps;
}

std::size_t CechTable::dim(std::size_t j, const Multidegree& m) const {
  for (const auto& e : entries)
    if (e.j == j && e.m == m) return e.dim;
  return 0;
}

std::vector<Multidegree> box_points(std::size_t n, int lo, int hi) {
  if (lo > hi) throw std::invalid_argument("empty box");
  std::vector<Multidegree> out;
  Multidegree m(n, lo);
  for (;;) {
    out.push_back(m);
    std::size_t i = n;
    while (i > 0 && m[i - 1] == hi) m[--i] = lo;
    if (i == 0) break;
    ++m[i - 1];
  }
  return out;
}

std::string to_string(const Multidegree& m) {
  std::string s = "(";
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
  return s + ")";
}

CechTable cech_cohomology(const SimplicialComplex& cx, const std::vector<ExponentVector>& generators, int lo,
                          int hi) {
  for (const auto& g : generators)
    if (g.size() != cx.num_vertices()) throw std::invalid_argument("generator has the wrong number of variables");
  CechTable table;
  table.generators = generators;
  table.lo = lo;
  table.hi = hi;
  const auto points = box_points(cx.num_vertices(), lo, hi);
  for (const auto& m : points) {
    const LocalCechComplex local(cx, generators, m);
    if (!local.d_squared_zero()) table.d_squared_zero = false;
    for (std::size_t j = 0; j <= generators.size(); ++j)
      if (const std::size_t d = local.cohomology_dim(j)) table.entries.push_back({j, m, d});
  }
  std::stable_sort(table.entries.begin(), table.entries.end(),
                   [](const CechEntry& a, const CechEntry& b) { return a.j < b.j; });
  return table;
}

std::vector<VertexSet> candidate_ass_primes(const CechTable& table, const SimplicialComplex& cx, std::size_t j) {
  const std::size_t n = cx.num_vertices();
  std::vector<VertexSet> out;
  for (const auto& entry : table.entries) {
    if (entry.j != j) continue;
    const Multidegree& m = entry.m;
    if (std::any_of(m.begin(), m.end(), [&](int v) { return v + 1 > table.hi; })) continue;
    const LocalCechComplex here(cx, table.generators, m);
    for (const SparseVector& z : here.class_representatives(j)) {
      VertexSet p;
      for (std::size_t i = 0; i < n; ++i) {
        Multidegree up = m;
        ++up[i];
        if (LocalCechComplex(cx, table.generators, up).is_coboundary(j, z)) p = p.with(static_cast<unsigned>(i));
      }
      // Every monomial off P that stays in the box must keep the class alive.
      const std::vector<unsigned> free = (VertexSet::range(static_cast<unsigned>(n)) - p).members();
      bool ok = true;
      Multidegree shift = m;
      auto walk = [&](auto&& self, std::size_t pos, bool moved) -> void {
        if (!ok) return;
        if (pos == free.size()) {
          if (moved && LocalCechComplex(cx, table.generators, shift).is_coboundary(j, z)) ok = false;
          return;
        }
        const unsigned v = free[pos];
        for (int e = m[v]; e <= table.hi; ++e) {
          shift[v] = e;
          self(self, pos + 1, moved || e != m[v]);
        }
        shift[v] = m[v];
      };
      walk(walk, 0, false);
      if (ok) out.push_back(p);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace srdmod
