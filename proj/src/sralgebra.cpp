#include "srdmod/sralgebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace srdmod {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Hilbert value exceeds 64 bits");
  return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Hilbert value exceeds 64 bits");
  return r;
}

std::uint64_t small_binomial(unsigned n, unsigned k) {
  const mpz_class b = binomial(n, k);
  if (!b.fits_ulong_p()) throw std::overflow_error("binomial exceeds 64 bits");
  return b.get_ui();
}

}  // namespace

std::vector<VertexSet> face_ideal_generators(const SimplicialComplex& cx) {
  // A minimal non-face is a non-face all of whose codimension-one subsets are
  // faces. Every such set is a face plus one vertex, so it suffices to scan
  // F u {v} over faces F.
  std::vector<VertexSet> out;
  for (VertexSet f : cx.faces())
    for (unsigned v : (cx.vertices() - f).members()) {
      const VertexSet g = f.with(v);
      if (cx.is_face(g)) continue;
      bool minimal = true;
      for (unsigned u : g.members())
        if (!cx.is_face(g.without(u))) {
          minimal = false;
          break;
        }
      if (minimal) out.push_back(g);
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<VertexSet> minimal_primes(const SimplicialComplex& cx) {
  std::vector<VertexSet> out;
  for (VertexSet h : cx.facets()) out.push_back(cx.vertices() - h);
  std::sort(out.begin(), out.end());
  return out;
}

unsigned krull_dim(const SimplicialComplex& cx) { return cx.max_facet_size(); }

std::uint64_t hilbert(const SimplicialComplex& cx, unsigned j) {
  if (j == 0) return 1;
  const auto f = cx.f_vector();
  std::uint64_t h = 0;
  for (unsigned s = 1; s < f.size(); ++s)
    h = checked_add(h, checked_mul(f[s], small_binomial(j - 1, s - 1)));
  return h;
}

std::uint64_t iterated_hilbert(const SimplicialComplex& cx, unsigned i) {
  std::uint64_t total = 0;
  for (unsigned j = 0; j <= i; ++j) total = checked_add(total, hilbert(cx, j));
  return total;
}

HilbertData hilbert_data(const SimplicialComplex& cx, unsigned max_degree) {
  HilbertData d;
  d.f_vector = cx.f_vector();
  d.r = krull_dim(cx);
  std::uint64_t running = 0;
  for (unsigned j = 0; j <= max_degree; ++j) {
    d.h.push_back(hilbert(cx, j));
    running = checked_add(running, d.h.back());
    d.h1.push_back(running);
  }
  return d;
}

Polynomial reduce_mod_face_ideal(const SimplicialComplex& cx, const Polynomial& p) {
  if (p.nvars() != cx.num_vertices())
    throw std::invalid_argument("polynomial has " + std::to_string(p.nvars()) +
                                " variables, complex has " + std::to_string(cx.num_vertices()));
  Polynomial r(p.field(), p.nvars());
  for (const auto& [e, c] : p.terms())
    if (cx.is_face(e.support())) r.add_term(e, c);
  return r;
}

StanleyReisnerRing::StanleyReisnerRing(SimplicialComplex cx, Field k)
    : cx_(std::make_shared<const SimplicialComplex>(std::move(cx))), field_(k) {}

RingElement StanleyReisnerRing::reduce(const Polynomial& p) const {
  if (!(p.field() == field_)) throw std::invalid_argument("polynomial over the wrong field");
  return RingElement(cx_, reduce_mod_face_ideal(*cx_, p));
}

RingElement StanleyReisnerRing::zero() const { return RingElement(cx_, Polynomial(field_, nvars())); }

RingElement StanleyReisnerRing::one() const {
  return RingElement(cx_, Polynomial::constant(field_, nvars(), Scalar::one(field_)));
}

RingElement StanleyReisnerRing::variable(std::size_t i) const {
  return reduce(Polynomial::variable(field_, nvars(), i));
}

RingElement RingElement::operator-() const { return RingElement(cx_, -poly_); }

RingElement operator+(const RingElement& a, const RingElement& b) {
  return RingElement(a.cx_, a.poly_ + b.poly_);
}

RingElement operator-(const RingElement& a, const RingElement& b) {
  return RingElement(a.cx_, a.poly_ - b.poly_);
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  return RingElement(a.cx_, reduce_mod_face_ideal(*a.cx_, a.poly_ * b.poly_));
}

RingElement operator*(const Scalar& c, const RingElement& a) { return RingElement(a.cx_, a.poly_ * c); }

}  // namespace srdmod
