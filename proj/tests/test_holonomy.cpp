#include "doctest.h"
#include "helpers.hpp"
#include "srdmod/holonomy.hpp"
#include "srdmod/idealizer.hpp"
#include "srdmod/linalg.hpp"
#include "srdmod/localization.hpp"
#include "srdmod/parse.hpp"
#include "srdmod/sralgebra.hpp"

using namespace srdmod;
using srdmod::test::full_simplex;
using srdmod::test::shared;

namespace {

const Field kQ = Field::rationals();

LocalizedContext tripp_at_w() { return LocalizedContext::saturate(shared(tripp_complex()), kQ, ExponentVector{0, 0, 0, 1}); }

}  // namespace

TEST_CASE("bernstein dimensions") {
  const auto cx = tripp_complex();
  CHECK(bernstein_dim(cx, 2) == 16);
  CHECK(bernstein_dim(cx, 1) == 5);
  CHECK(bernstein_dim(two_edges_complex(), 0) == 1);
  for (unsigned i = 0; i <= 5; ++i) CHECK(bernstein_dim(cx, i) == dr_basis_up_to(cx, i).size());
}

TEST_CASE("growth report for the tripp ring") {
  const GrowthReport g = r_filtration_report(tripp_complex(), 6);
  CHECK(g.mode == "stanley-reisner");
  CHECK(g.r == 2);
  CHECK(g.dims == std::vector<std::uint64_t>{1, 5, 12, 22, 35, 51, 70});
  CHECK(g.leading == mpq_class(3, 2));
  CHECK(g.verdict == Verdict::pass);
  CHECK(g.length_bound == g.C * 2);
  for (unsigned i = 1; i < g.dims.size(); ++i) CHECK(mpq_class(g.dims[i]) <= g.C * i * i);
  CHECK_THROWS(r_filtration_report(tripp_complex(), 3));
}

TEST_CASE("growth report on a line") {
  const GrowthReport g = r_filtration_report(full_simplex(1), 4);
  CHECK(g.mode == "polynomial-ring");
  CHECK(g.dims == std::vector<std::uint64_t>{1, 2, 3, 4, 5});
  CHECK(g.r == 1);
  CHECK(g.leading == 1);
  CHECK(g.verdict == Verdict::pass);
}

TEST_CASE("growth reports on random t-spaces") {
  Rng rng(8);
  int seen = 0;
  for (int s = 0; s < 5000 && seen < 10; ++s) {
    const auto cx = random_complex(static_cast<unsigned>(rng.uniform(1, 6)), rng);
    if (is_t_space(cx) != TSpaceVerdict::yes) continue;
    ++seen;
    const GrowthReport g = r_filtration_report(cx, 8);
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), g.r);
    REQUIRE(g.leading >= mpq_class(1, fact));
    REQUIRE(g.verdict == Verdict::pass);
    for (std::size_t i = g.r + 1; i < g.differences.size(); ++i) REQUIRE(g.differences[i] == g.differences.back());
  }
  CHECK(seen == 10);
}

TEST_CASE("filtration on R_w of the tripp ring") {
  const auto ctx = tripp_at_w();
  const RfCheck r = rf_filtration_check(ctx, 3, 3);
  CHECK(r.verdict == Verdict::pass);
  CHECK(r.checked > 0);
  CHECK_FALSE(r.witness);
  CHECK(in_rf_level(Fraction(ctx, Polynomial::constant(kQ, 4, Scalar::one(kQ)), 0), 0, ctx));
  CHECK(in_rf_level(Fraction(ctx, Polynomial::constant(kQ, 4, Scalar::one(kQ)), 3), 3, ctx));
  CHECK_FALSE(in_rf_level(Fraction(ctx, Polynomial::constant(kQ, 4, Scalar::one(kQ)), 3), 2, ctx));
  CHECK_FALSE(in_rf_level(Fraction(ctx, Polynomial::monomial(kQ, ExponentVector{0, 0, 0, 3}), 0), 1, ctx));
}

TEST_CASE("multiplication by a variable stays in the next level") {
  const auto ctx = tripp_at_w();
  for (unsigned j = 0; j <= 3; ++j)
    for (std::size_t i = 0; i < 4; ++i) {
      const Fraction u(ctx, Polynomial::constant(kQ, 4, Scalar::one(kQ)), j);
      CHECK(in_rf_level(act(i, 0, u, ctx), j + 1, ctx));
    }
}

TEST_CASE("divided derivative divisibility examples") {
  const std::vector<std::string> xy{"x", "y"};
  const Polynomial f = parse_polynomial("x^2 + y", kQ, xy);
  const auto r = divided_derivative_divisibility(f, 2, 1, 0);
  CHECK(r.verdict == Verdict::pass);
  REQUIRE(r.quotient);
  CHECK(*r.quotient == parse_polynomial("4*x", kQ, xy));
  CHECK(r.bound == 1);
  CHECK(*divided_derivative_divisibility(f, 3, 0, 0).quotient == parse_polynomial("1", kQ, xy));
  const auto top = divided_derivative_divisibility(f, 2, 2, 0);
  CHECK(top.verdict == Verdict::pass);
  CHECK(*top.quotient == f.pow(2).divided_partial(0, 2));
}

TEST_CASE("divided derivative divisibility on random polynomials") {
  Rng rng(50);
  for (int s = 0; s < 50; ++s) {
    const std::size_t n = rng.uniform(1, 3);
    Polynomial f = random_polynomial(rng, kQ, n, 3, 3);
    while (f.is_zero()) f = random_polynomial(rng, kQ, n, 3, 3);
    const auto j = static_cast<unsigned>(rng.uniform(0, 3));
    const auto sd = static_cast<unsigned>(rng.uniform(0, j));
    const auto res = divided_derivative_divisibility(f, j, sd, rng.uniform(0, n - 1));
    REQUIRE(res.verdict == Verdict::pass);
  }
}

TEST_CASE("operators of degree i applied to 1 span H_1(R,i) dimensions") {
  const auto cx = tripp_complex();
  const StanleyReisnerRing ring(cx, kQ);
  for (unsigned i = 0; i <= 5; ++i) {
    std::vector<SparseVector> images;
    std::map<ExponentVector, std::uint64_t> cols;
    for (const auto& m : dr_basis_up_to(cx, i)) {
      const auto img = ring.reduce(apply(DiffOp::monomial(kQ, m), Polynomial::constant(kQ, 4, Scalar::one(kQ))));
      SparseVector v;
      for (const auto& [e, c] : img.polynomial().terms()) v.emplace(cols.try_emplace(e, cols.size()).first->second, c);
      images.push_back(v);
    }
    CHECK(rank(kQ, images) == iterated_hilbert(cx, i));
  }
}

TEST_CASE("bernstein levels multiply and act compatibly") {
  const auto cx = shared(tripp_complex());
  const auto basis = dr_basis_up_to(*cx, 3);
  const StanleyReisnerRing ring(*cx, kQ);
  for (const auto& u : basis)
    for (const auto& v : basis) {
      const DROperator uv = compose_dr(DROperator(cx, DiffOp::monomial(kQ, u)), DROperator(cx, DiffOp::monomial(kQ, v)));
      for (const auto& [m, c] : uv.op().terms()) REQUIRE(m.degree() <= u.degree() + v.degree());
    }
  for (const auto& u : basis)
    for_each_exponent_up_to(4, 3, [&](const ExponentVector& e) {
      if (!cx->is_face(e.support())) return;
      const auto img = ring.reduce(apply(DiffOp::monomial(kQ, u), Polynomial::monomial(kQ, e)));
      for (const auto& [m, c] : img.polynomial().terms()) REQUIRE(m.degree() <= u.degree() + e.degree());
    });
}
