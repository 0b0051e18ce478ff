#include "doctest.h"
#include "helpers.hpp"
#include "srdmod/oracles.hpp"
#include "srdmod/parse.hpp"
#include "srdmod/sralgebra.hpp"

using namespace srdmod;
using srdmod::test::full_simplex;
using srdmod::test::vs;

namespace {

std::vector<std::string> rendered_generators(const SimplicialComplex& cx) {
  std::vector<std::string> out;
  for (VertexSet s : face_ideal_generators(cx))
    out.push_back(ExponentVector::indicator(cx.num_vertices(), s).to_string(cx.labels()));
  return out;
}

}  // namespace

TEST_CASE("face ideal generators") {
  CHECK(rendered_generators(tripp_complex()) == std::vector<std::string>{"x*w", "y*w", "z*w", "x*y*z"});
  CHECK(face_ideal_generators(full_simplex(3)).empty());
  CHECK(rendered_generators(two_edges_complex()) == std::vector<std::string>{"x*z", "y*z", "x*w", "y*w"});
}

TEST_CASE("minimal primes are facet complements") {
  CHECK(minimal_primes(tripp_complex()) == std::vector<VertexSet>{vs({0, 3}), vs({1, 3}), vs({2, 3}), vs({0, 1, 2})});
  CHECK(minimal_primes(full_simplex(3)) == std::vector<VertexSet>{VertexSet()});
  CHECK(minimal_primes(two_edges_complex()) == std::vector<VertexSet>{vs({0, 1}), vs({2, 3})});
}

TEST_CASE("face ideal generators match minimal non-faces exhaustively") {
  for (const auto& cx : exhaustive_complexes(5)) REQUIRE(face_ideal_generators(cx) == oracle::minimal_non_faces(cx));
}

TEST_CASE("intersection of minimal primes is the face ideal on monomials") {
  for (const auto& cx : exhaustive_complexes(4)) {
    const auto primes = minimal_primes(cx);
    for_each_exponent_up_to(cx.num_vertices(), 4, [&](const ExponentVector& e) {
      const bool in_all = std::all_of(primes.begin(), primes.end(), [&](VertexSet p) { return e.support().intersects(p); });
      REQUIRE(in_all == !cx.is_face(e.support()));
    });
  }
}

TEST_CASE("reduction modulo the face ideal") {
  const auto cx = tripp_complex();
  const Field q = Field::rationals();
  const StanleyReisnerRing r(cx, q);
  CHECK(r.reduce(parse_polynomial("x*w + x^2", q, cx.labels())).to_string() == "x^2");
  CHECK(r.reduce(Polynomial(q, 4)).is_zero());
  CHECK(r.reduce(parse_polynomial("(x + w)^2", q, cx.labels())).to_string() == "x^2 + w^2");
  const StanleyReisnerRing r2(cx, Field::prime(2));
  CHECK(r2.reduce(parse_polynomial("(x + w)^2", Field::prime(2), cx.labels())).to_string() == "x^2 + w^2");
}

TEST_CASE("reduction is idempotent and multiplicative") {
  const Field q = Field::rationals();
  Rng rng(5);
  for (const auto& cx : random_complexes(4, 10, 3)) {
    const StanleyReisnerRing r(cx, q);
    for (int s = 0; s < 10; ++s) {
      const auto p = random_polynomial(rng, q, cx.num_vertices(), 4, 4);
      const auto g = random_polynomial(rng, q, cx.num_vertices(), 4, 4);
      CHECK(r.reduce(r.reduce(p).polynomial()) == r.reduce(p));
      CHECK(r.reduce(p) * r.reduce(g) == r.reduce(p * g));
    }
  }
}

TEST_CASE("hilbert function of the tripp ring") {
  const auto cx = tripp_complex();
  CHECK(hilbert(cx, 0) == 1);
  CHECK(hilbert(cx, 2) == 7);
  CHECK(hilbert(cx, 5) == 16);
  CHECK(iterated_hilbert(cx, 0) == 1);
  CHECK(iterated_hilbert(cx, 2) == 12);
  CHECK(iterated_hilbert(cx, 4) == oracle::hilbert(cx, 0) + oracle::hilbert(cx, 1) + oracle::hilbert(cx, 2) +
                                       oracle::hilbert(cx, 3) + oracle::hilbert(cx, 4));
  CHECK(iterated_hilbert(cx, 4) == 35);
  const auto d = hilbert_data(cx, 5);
  CHECK(d.h == std::vector<std::uint64_t>{1, 4, 7, 10, 13, 16});
  CHECK(d.h1 == std::vector<std::uint64_t>{1, 5, 12, 22, 35, 51});
  CHECK(d.r == 2);
}

TEST_CASE("hilbert closed form matches brute-force counting") {
  for (const auto& cx : random_complexes(5, 15, 21))
    for (unsigned j = 0; j <= 8; ++j) REQUIRE(hilbert(cx, j) == oracle::hilbert(cx, j));
  for (const auto& cx : exhaustive_complexes(3))
    for (unsigned j = 0; j <= 10; ++j) REQUIRE(hilbert(cx, j) == oracle::hilbert(cx, j));
}

TEST_CASE("krull dimension") {
  CHECK(krull_dim(tripp_complex()) == 2);
  CHECK(krull_dim(full_simplex(4)) == 4);
  CHECK(krull_dim(full_simplex(1)) == 1);
  CHECK(krull_dim(SimplicialComplex()) == 0);
}

TEST_CASE("r-th difference of the iterated hilbert function is eventually constant") {
  mpz_class fact;
  for (const auto& cx : random_complexes(5, 10, 8)) {
    const unsigned r = krull_dim(cx);
    std::vector<mpz_class> d;
    for (unsigned i = 0; i <= r + 6; ++i) d.emplace_back(static_cast<unsigned long>(iterated_hilbert(cx, i)));
    for (unsigned k = 0; k < r; ++k)
      for (std::size_t i = 0; i + 1 < d.size() - k; ++i) d[i] = d[i + 1] - d[i];
    d.resize(d.size() - r);
    mpz_fac_ui(fact.get_mpz_t(), r);
    // leading coefficient = f_{r-1}/r! >= 1/r!
    for (std::size_t i = r; i < d.size(); ++i) CHECK(d[i] == d.back());
    CHECK(d.back() >= 1);
  }
}
