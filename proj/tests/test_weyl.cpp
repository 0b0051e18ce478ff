#include "doctest.h"
#include "helpers.hpp"
#include "srdmod/parse.hpp"
#include "srdmod/weyl.hpp"

using namespace srdmod;

namespace {

const std::vector<std::string> kX{"x"};
const std::vector<std::string> kXY{"x", "y"};

DiffOp op(const std::string& s, Field k = Field::rationals(), const std::vector<std::string>& labels = kX) {
  return parse_operator(s, k, labels);
}

Polynomial poly(const std::string& s, Field k = Field::rationals(), const std::vector<std::string>& labels = kX) {
  return parse_polynomial(s, k, labels);
}

}  // namespace

TEST_CASE("divided powers act by binomial coefficients") {
  CHECK(apply(op("d1^[2]"), poly("x^5")) == poly("10*x^3"));
  CHECK(apply(op("x d1^[3] + 4"), Polynomial(Field::rationals(), 1)).is_zero());
  const Field f2 = Field::prime(2);
  CHECK(apply(op("d1^[1]", f2), poly("x^2", f2)).is_zero());
  CHECK(apply(op("d1^[2]", f2), poly("x^2", f2)) == poly("1", f2));
}

TEST_CASE("composition examples") {
  CHECK(compose(op("d1^[1]"), op("d1^[1]")) == op("2 d1^[2]"));
  CHECK(compose(op("x d1^[1]"), op("x")) == op("x^2 d1^[1] + x"));
  const DiffOp d = op("3 x^2 d1^[2] - x");
  CHECK(compose(d, DiffOp::identity(Field::rationals(), 1)) == d);
  CHECK(op("d1^2") == op("2 d1^[2]"));
}

TEST_CASE("commutators") {
  CHECK(commutator(op("x d1^[2]", Field::rationals(), kXY), op("y d2^[3]", Field::rationals(), kXY)).is_zero());
  const DiffOp c = commutator(op("x d1^[1]"), op("x d1^[2]"));
  CHECK_FALSE(c.is_zero());
  // On x^2: x d^[2] x d gives 2x, x d x d^[2] gives x.
  CHECK(c == op("-x d1^[2]"));
  CHECK(apply(c, poly("x^2")) == poly("-x"));
  const DiffOp d = op("x^3 d1^[2] + 7 d1^[1]");
  CHECK(commutator(d, d).is_zero());
}

TEST_CASE("order") {
  CHECK(order(op("x^3")) == 0);
  CHECK(order(op("x d1^[2]")) == 2);
  CHECK(order(op("x d1^[1] + d2^[3]", Field::rationals(), kXY)) == 3);
  CHECK(order(DiffOp(Field::rationals(), 1)) == -1);
}

TEST_CASE("composition agrees with successive action") {
  for (const Field k : {Field::rationals(), Field::prime(2), Field::prime(3)}) {
    Rng rng(17 + k.characteristic());
    for (int s = 0; s < 60; ++s) {
      const std::size_t n = rng.uniform(1, 3);
      const DiffOp a = random_operator(rng, k, n, 4, 3);
      const DiffOp b = random_operator(rng, k, n, 4, 3);
      const DiffOp c = random_operator(rng, k, n, 4, 3);
      const Polynomial p = Polynomial::monomial(k, random_exponent(rng, n, 6));
      REQUIRE(apply(compose(a, b), p) == apply(a, apply(b, p)));
      REQUIRE(compose(compose(a, b), c) == compose(a, compose(b, c)));
      if (!a.is_zero() && !b.is_zero() && !compose(a, b).is_zero())
        CHECK(order(compose(a, b)) <= order(a) + order(b));
    }
  }
}

TEST_CASE("product rule for x d^[t] times a polynomial") {
  const Field q = Field::rationals();
  Rng rng(4);
  for (int s = 0; s < 30; ++s) {
    const Polynomial f = random_polynomial(rng, q, 1, 4, 3);
    const auto t = static_cast<unsigned>(rng.uniform(0, 4));
    DiffOp rhs(q, 1);
    for (unsigned k = 0; k <= t; ++k)
      rhs += compose(DiffOp::multiplication(f.divided_partial(0, k)), DiffOp::x_dt(q, 1, 0, t - k));
    REQUIRE(compose(DiffOp::x_dt(q, 1, 0, t), DiffOp::multiplication(f)) == rhs);
  }
}

TEST_CASE("x d^[t] past a power of x") {
  const Field q = Field::rationals();
  for (unsigned t = 0; t <= 5; ++t)
    for (unsigned u = 0; u <= 5; ++u) {
      DiffOp rhs(q, 1);
      for (unsigned s = 0; s <= std::min(t, u); ++s)
        rhs.add_term({ExponentVector{u - s + 1}, ExponentVector{t - s}}, Scalar(q, binomial(u, s)));
      REQUIRE(compose(DiffOp::x_dt(q, 1, 0, t), DiffOp::multiplication(Polynomial::monomial(q, ExponentVector{u}))) ==
              rhs);
    }
}

TEST_CASE("generators in different variables commute") {
  const Field q = Field::rationals();
  for (unsigned s = 0; s <= 4; ++s)
    for (unsigned t = 0; t <= 4; ++t) {
      CHECK(commutator(DiffOp::x_dt(q, 3, 0, s), DiffOp::x_dt(q, 3, 2, t)).is_zero());
      CHECK(commutator(DiffOp::x_dt(q, 3, 1, s), DiffOp::multiplication(Polynomial::variable(q, 3, 0))).is_zero());
    }
}

TEST_CASE("operator text round-trips") {
  const auto labels = std::vector<std::string>{"x", "y", "z", "w"};
  const DiffOp d = parse_operator("x1^2 d1^[3] + 5 x2 d2^[1] - 1/2 w", Field::rationals(), labels);
  CHECK(parse_operator(d.to_string(labels), Field::rationals(), labels) == d);
  CHECK_THROWS_AS(parse_operator("x +", Field::rationals(), labels), ParseError);
  CHECK_THROWS_AS(parse_polynomial("d1", Field::rationals(), labels), ParseError);
}
