#include "srdmod/oracles.hpp"

#include <algorithm>

namespace srdmod::oracle {

namespace {

std::uint64_t subset_count(const SimplicialComplex& cx) { return std::uint64_t{1} << cx.num_vertices(); }

bool face(const SimplicialComplex& cx, std::uint64_t mask) {
  return std::any_of(cx.facets().begin(), cx.facets().end(),
                     [&](VertexSet h) { return (mask & ~h.bits()) == 0; });
}

}  // namespace

TSpaceVerdict t_space(const SimplicialComplex& cx) {
  if (cx.num_vertices() > 0 && cx.facets().size() == 1 && cx.facets()[0] == cx.vertices())
    return TSpaceVerdict::not_applicable;
  const std::uint64_t all = subset_count(cx);
  for (std::uint64_t f = 0; f < all; ++f) {
    if (!face(cx, f)) continue;
    for (std::uint64_t g = 0; g < all; ++g) {
      if ((g & ~f) == 0) continue;
      const bool sep = std::any_of(cx.facets().begin(), cx.facets().end(), [&](VertexSet h) {
        return (f & ~h.bits()) == 0 && (g & ~h.bits()) != 0;
      });
      if (!sep) return TSpaceVerdict::no;
    }
  }
  return TSpaceVerdict::yes;
}

std::set<std::set<std::string>> link_faces(const SimplicialComplex& cx, VertexSet fc) {
  std::set<std::set<std::string>> out;
  const std::uint64_t all = subset_count(cx);
  for (std::uint64_t g = 0; g < all; ++g) {
    if (g & fc.bits()) continue;
    if (!face(cx, g | fc.bits())) continue;
    std::set<std::string> names;
    for (unsigned v = 0; v < cx.num_vertices(); ++v)
      if ((g >> v) & 1u) names.insert(cx.labels()[v]);
    out.insert(names);
  }
  return out;
}

std::vector<VertexSet> minimal_non_faces(const SimplicialComplex& cx) {
  std::vector<VertexSet> out;
  const std::uint64_t all = subset_count(cx);
  for (std::uint64_t g = 0; g < all; ++g) {
    if (face(cx, g)) continue;
    bool minimal = true;
    for (std::uint64_t h = 0; h < all && minimal; ++h)
      if (h != g && (h & ~g) == 0 && !face(cx, h)) minimal = false;
    if (minimal) out.emplace_back(g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t hilbert(const SimplicialComplex& cx, unsigned j) {
  std::uint64_t count = 0;
  const std::size_t n = cx.num_vertices();
  std::vector<unsigned> e(n, 0);
  // Odometer over all vectors with entries <= j, keeping those of degree j.
  if (n == 0) return j == 0 ? 1 : 0;
  for (;;) {
    unsigned deg = 0;
    std::uint64_t supp = 0;
    for (std::size_t i = 0; i < n; ++i) {
      deg += e[i];
      if (e[i]) supp |= std::uint64_t{1} << i;
    }
    if (deg == j && face(cx, supp)) ++count;
    std::size_t i = 0;
    while (i < n && e[i] == j) e[i++] = 0;
    if (i == n) break;
    ++e[i];
  }
  return count;
}

bool idealizer_preserves(const ExponentVector& a, const ExponentVector& t, const SimplicialComplex& cx, Field k) {
  const std::size_t n = cx.num_vertices();
  std::vector<unsigned> v(n, 0);
  for (;;) {
    std::uint64_t supp_v = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (v[i]) supp_v |= std::uint64_t{1} << i;
    if (!face(cx, supp_v)) {
      // Image: prod C(v_i, t_i) x^(a + v - t), zero when some v_i < t_i.
      bool zero = false;
      mpz_class coef = 1;
      std::uint64_t supp_img = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (v[i] < t[i]) {
          zero = true;
          break;
        }
        coef *= binomial(v[i], t[i]);
        if (a[i] + v[i] - t[i] > 0) supp_img |= std::uint64_t{1} << i;
      }
      if (!zero && !Scalar(k, coef).is_zero() && face(cx, supp_img)) return false;
    }
    std::size_t i = 0;
    while (i < n && v[i] == t[i] + 1) v[i++] = 0;
    if (i == n) break;
    ++v[i];
  }
  return true;
}

RawFraction calculus_act(const Polynomial& f, const Polynomial& g, unsigned j, std::size_t i, unsigned t) {
  const Field q = Field::rationals();
  Polynomial num = g;
  unsigned k = j;
  const Polynomial df = f.divided_partial(i, 1);
  for (unsigned s = 0; s < t; ++s) {
    num = num.divided_partial(i, 1) * f - num * df * Scalar(q, static_cast<long>(k));
    ++k;
  }
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), t);
  num = num * Scalar(q, mpq_class(1, fact)) * Polynomial::variable(q, f.nvars(), i);
  return {num, k};
}

bool killed_by_generators(const SimplicialComplex& cx, const std::vector<ExponentVector>& gens,
                          const std::vector<int>& m) {
  const std::size_t n = cx.num_vertices();
  ExponentVector e(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i] < 0) return false;
    e[i] = static_cast<std::uint32_t>(m[i]);
  }
  const Field q = Field::rationals();
  for (const auto& g : gens) {
    Polynomial p = Polynomial::monomial(q, e) * Polynomial::monomial(q, g).pow(static_cast<unsigned>(n + 1));
    for (const auto& [mono, c] : p.terms())
      if (face(cx, mono.support().bits())) return false;
  }
  return true;
}

bool localized_monomial_nonzero(const SimplicialComplex& cx, const ExponentVector& g, const std::vector<int>& m) {
  const std::size_t n = cx.num_vertices();
  int need = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i] < 0 && g[i] == 0) return false;
    if (m[i] < 0) need = std::max(need, -m[i]);
  }
  // One extra power of g: a monomial stays nonzero after every further
  // multiplication by g iff it does after one more.
  const auto power = static_cast<std::uint32_t>(need + 1);
  std::uint64_t supp = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const long v = m[i] + static_cast<long>(power) * g[i];
    if (v > 0) supp |= std::uint64_t{1} << i;
  }
  return face(cx, supp);
}

}  // namespace srdmod::oracle
