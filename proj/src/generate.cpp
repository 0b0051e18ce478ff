#include "srdmod/generate.hpp"

#include <limits>
#include <stdexcept>

namespace srdmod {

std::uint64_t Rng::uniform(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) throw std::invalid_argument("empty range");
  const std::uint64_t span = hi - lo;
  if (span == std::numeric_limits<std::uint64_t>::max()) return eng_();
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t v;
  do v = eng_();
  while (v >= limit);
  return lo + v % range;
}

std::int64_t Rng::uniform_signed(std::int64_t lo, std::int64_t hi) {
  const auto off = uniform(0, static_cast<std::uint64_t>(hi - lo));
  return lo + static_cast<std::int64_t>(off);
}

namespace {

void antichains(unsigned k, std::uint64_t next, std::vector<VertexSet>& chosen,
                std::vector<SimplicialComplex>& out) {
  const std::uint64_t full = (std::uint64_t{1} << k) - 1;
  std::uint64_t covered = 0;
  for (VertexSet s : chosen) covered |= s.bits();
  if (!chosen.empty() && covered == full) out.push_back(SimplicialComplex::from_facets(chosen, k));
  for (std::uint64_t m = next; m <= full; ++m) {
    const VertexSet s(m);
    bool ok = true;
    for (VertexSet c : chosen)
      if (c.is_subset_of(s) || s.is_subset_of(c)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    chosen.push_back(s);
    antichains(k, m + 1, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<SimplicialComplex> exhaustive_complexes(unsigned n) {
  if (n > 6) throw std::length_error("exhaustive enumeration is limited to 6 vertices");
  std::vector<SimplicialComplex> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<VertexSet> chosen;
  for (unsigned k = 1; k <= n; ++k) antichains(k, 1, chosen, out);
  return out;
}

std::vector<SimplicialComplex> all_graphs(unsigned n) {
  if (n > 8) throw std::length_error("graph enumeration is limited to 8 vertices");
  std::vector<std::pair<unsigned, unsigned>> pairs;
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  std::vector<SimplicialComplex> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<VertexSet> facets;
    for (std::size_t e = 0; e < pairs.size(); ++e)
      if ((mask >> e) & 1u) facets.push_back(VertexSet::of({pairs[e].first, pairs[e].second}));
    for (unsigned v = 0; v < n; ++v) facets.push_back(VertexSet::of({v}));
    out.push_back(SimplicialComplex::from_facets(facets, n));
  }
  return out;
}

SimplicialComplex random_complex(unsigned n, Rng& rng) {
  if (n > 20) throw std::length_error("random complexes are limited to 20 vertices");
  if (n == 0) return SimplicialComplex();
  const auto count = rng.uniform(1, n + 1);
  std::vector<VertexSet> cands;
  for (std::uint64_t i = 0; i < count; ++i) cands.emplace_back(rng.uniform(1, (std::uint64_t{1} << n) - 1));
  return SimplicialComplex::from_facets(cands, n);
}

std::vector<SimplicialComplex> random_complexes(unsigned n, std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<SimplicialComplex> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_complex(n, rng));
  return out;
}

ExponentVector random_exponent(Rng& rng, std::size_t n, unsigned max_degree) {
  ExponentVector e(n);
  if (n == 0) return e;
  const auto deg = rng.uniform(0, max_degree);
  for (std::uint64_t i = 0; i < deg; ++i) ++e[rng.uniform(0, n - 1)];
  return e;
}

namespace {

Scalar random_coefficient(Rng& rng, Field k) {
  std::int64_t c = 0;
  while (c == 0) c = rng.uniform_signed(-3, 3);
  return Scalar(k, static_cast<long>(c));
}

}  // namespace

Polynomial random_polynomial(Rng& rng, Field k, std::size_t n, unsigned max_degree, unsigned max_terms) {
  Polynomial p(k, n);
  const auto terms = rng.uniform(1, max_terms);
  for (std::uint64_t i = 0; i < terms; ++i) p.add_term(random_exponent(rng, n, max_degree), random_coefficient(rng, k));
  return p;
}

DiffOp random_operator(Rng& rng, Field k, std::size_t n, unsigned max_degree, unsigned max_terms) {
  DiffOp op(k, n);
  const auto terms = rng.uniform(1, max_terms);
  for (std::uint64_t i = 0; i < terms; ++i) {
    const ExponentVector a = random_exponent(rng, n, max_degree);
    const ExponentVector t = random_exponent(rng, n, max_degree - static_cast<unsigned>(a.degree()));
    op.add_term({a, t}, random_coefficient(rng, k));
  }
  return op;
}

SimplicialComplex tripp_complex() {
  return SimplicialComplex::from_facets(
      {VertexSet::of({0, 1}), VertexSet::of({0, 2}), VertexSet::of({1, 2}), VertexSet::of({3})}, 4,
      {"x", "y", "z", "w"});
}

SimplicialComplex two_edges_complex() {
  return SimplicialComplex::from_facets({VertexSet::of({0, 1}), VertexSet::of({2, 3})}, 4, {"x", "y", "z", "w"});
}

}  // namespace srdmod
