#include "doctest.h"
#include "helpers.hpp"
#include "srdmod/cech.hpp"
#include "srdmod/oracles.hpp"

using namespace srdmod;
using srdmod::test::vs;

namespace {

const ExponentVector kW{0, 0, 0, 1};

bool nonnegative(const Multidegree& m) {
  return std::all_of(m.begin(), m.end(), [](int v) { return v >= 0; });
}

VertexSet positive_support(const Multidegree& m) {
  VertexSet s;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] > 0) s = s.with(static_cast<unsigned>(i));
  return s;
}

}  // namespace

TEST_CASE("local cohomology of the tripp ring along w") {
  const auto cx = tripp_complex();
  const CechTable t = cech_cohomology(cx, {kW}, -4, 4);
  CHECK(t.d_squared_zero);
  for (const auto& m : box_points(4, -4, 4)) {
    // H^0 is (x,y,z)R: nonzero monomials without w other than 1.
    const bool in_ideal = nonnegative(m) && cx.is_face(positive_support(m)) && m[3] == 0 &&
                          !positive_support(m).empty();
    REQUIRE(t.dim(0, m) == (in_ideal ? 1u : 0u));
    const bool h1 = m[0] == 0 && m[1] == 0 && m[2] == 0 && m[3] < 0;
    REQUIRE(t.dim(1, m) == (h1 ? 1u : 0u));
  }
}

TEST_CASE("candidate associated primes along w") {
  const auto cx = tripp_complex();
  const CechTable t = cech_cohomology(cx, {kW}, -4, 4);
  CHECK(candidate_ass_primes(t, cx, 1) == std::vector<VertexSet>{vs({0, 1, 2, 3})});
  // Frozen from the box probe: classes on the x, y and z axes of (x,y,z)R.
  CHECK(candidate_ass_primes(t, cx, 0) == std::vector<VertexSet>{vs({0, 3}), vs({1, 3}), vs({2, 3})});
  const CechTable zero = cech_cohomology(cx, {ExponentVector(4)}, -2, 2);
  CHECK(candidate_ass_primes(zero, cx, 0).empty());
}

TEST_CASE("unit ideal has no local cohomology") {
  const auto cx = tripp_complex();
  const CechTable t = cech_cohomology(cx, {ExponentVector(4)}, -2, 2);
  for (const auto& e : t.entries) REQUIRE(e.dim == 0);
}

TEST_CASE("no generators gives R in degree zero") {
  const auto cx = tripp_complex();
  const CechTable t = cech_cohomology(cx, {}, -1, 2);
  for (const auto& m : box_points(4, -1, 2))
    REQUIRE(t.dim(0, m) == (nonnegative(m) && cx.is_face(positive_support(m)) ? 1u : 0u));
}

TEST_CASE("cell basis rule matches explicit localization") {
  for (const auto& cx : exhaustive_complexes(4))
    for (VertexSet g : cx.faces())
      for (const auto& m : box_points(cx.num_vertices(), -2, 2))
        REQUIRE(cell_nonzero(cx, g, m) ==
                oracle::localized_monomial_nonzero(cx, ExponentVector::indicator(cx.num_vertices(), g), m));
}

TEST_CASE("differentials square to zero and H^0 is the saturation") {
  Rng rng(23);
  for (const auto& cx : random_complexes(4, 10, 40)) {
    const std::size_t n = cx.num_vertices();
    std::vector<ExponentVector> gens;
    for (int k = 0; k < 2; ++k) gens.push_back(random_exponent(rng, n, 2));
    const CechTable t = cech_cohomology(cx, gens, -2, 2);
    REQUIRE(t.d_squared_zero);
    for (const auto& m : box_points(n, -2, 2)) {
      const bool sat = nonnegative(m) && cx.is_face(positive_support(m)) && oracle::killed_by_generators(cx, gens, m);
      REQUIRE(t.dim(0, m) == (sat ? 1u : 0u));
    }
  }
}

TEST_CASE("multidegree rendering") {
  CHECK(to_string(Multidegree{0, -1, 2}) == "(0,-1,2)");
  CHECK(box_points(2, -1, 1).size() == 9);
}
