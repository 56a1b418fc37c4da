#include <random>

#include "conemod/poly/fraction.hpp"
#include "conemod/poly/parse.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace conemod;

namespace {

RingPtr working_ring(std::uint64_t rho = 2, std::uint64_t sigma = 1, std::uint64_t w = 1) {
  return make_ring(VarTable({"a11", "a21", "a22", "e", "f1", "f2"}, {0, rho, rho, sigma, w, rho + w}));
}

RingPtr xyz() { return make_ring(VarTable({"x", "y", "z"}, {1, 1, 1})); }

}  // namespace

TEST_CASE("rational parsing canonicalizes") {
  CHECK(to_string(parse_rational("4/6")) == "2/3");
  CHECK(to_string(parse_rational("-0/5")) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
}

TEST_CASE("parse and print small expressions") {
  auto r = working_ring();
  const Poly p = parse_poly("a11*a22", r);
  CHECK(p.size() == 1);
  CHECK(weighted_degree(p) == WeightedDegree::of(2));
  CHECK(parse_poly("f2 - a21*f1", r).size() == 2);
  const Poly q = parse_poly("3/2*e^2", r);
  CHECK(q.size() == 1);
  CHECK(q.leading_coefficient() == Rational(3, 2));
  CHECK(to_string(q) == "3/2*e^2");
  CHECK(to_string(parse_poly("-f1 + 0*e", r)) == "-1*f1");
  CHECK_THROWS_AS(parse_poly("(x + y)^2", xyz()), ParseError);
  CHECK(to_string(parse_poly("(x+y)*(x-y)", xyz())) == "x^2 - y^2");
}

TEST_CASE("parse errors carry positions") {
  auto r = xyz();
  try {
    parse_poly("x + * y", r);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  try {
    parse_poly("x + w", r);
    FAIL("expected an unknown identifier");
  } catch (const UnknownIdentifier& e) {
    CHECK(e.name() == "w");
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(parse_poly("x^", r), ParseError);
  CHECK_THROWS_AS(parse_poly("(x", r), ParseError);
  CHECK_THROWS_AS(parse_poly("x 2", r), ParseError);
  CHECK_THROWS_AS(parse_poly("x/y", r), ParseError);
}

TEST_CASE("print then parse is the identity on random polynomials") {
  std::mt19937_64 rng(7);
  auto r = xyz();
  for (int k = 0; k < 200; ++k) {
    const Poly p = oracle::random_poly(rng, r, 4, 6);
    CHECK(parse_poly(to_string(p), r) == p);
  }
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(11);
  auto r = xyz();
  for (int k = 0; k < 100; ++k) {
    const Poly p = oracle::random_poly(rng, r, 3, 4);
    const Poly q = oracle::random_poly(rng, r, 3, 4);
    const Poly s = oracle::random_poly(rng, r, 3, 4);
    CHECK((p + q) * s == p * s + q * s);
    CHECK(p * q == q * p);
    CHECK((p * q) * s == p * (q * s));
    CHECK(p - p == Poly(r));
  }
}

TEST_CASE("weighted degree") {
  auto r = working_ring();
  CHECK(weighted_degree(parse_poly("a11", r)) == WeightedDegree::of(0));
  CHECK(weighted_degree(parse_poly("f2", r)) == WeightedDegree::of(3));
  CHECK(weighted_degree(parse_poly("f1 + e", r)) == WeightedDegree::of(1));
  CHECK(weighted_degree(parse_poly("f1 + f2", r)).kind() == WeightedDegree::Kind::Inhomogeneous);
  CHECK(weighted_degree(Poly(r)).is_zero());
  std::mt19937_64 rng(3);
  auto mono = [&](std::size_t i) { return Poly::variable(r, i); };
  for (int k = 0; k < 50; ++k) {
    const Poly p = mono(rng() % 6) * mono(rng() % 6) + Poly(r);
    const Poly q = mono(rng() % 6);
    CHECK(weighted_degree(p * q).value() == weighted_degree(p).value() + weighted_degree(q).value());
  }
}

TEST_CASE("homogeneous components") {
  auto r = working_ring();
  CHECK(homogeneous_components(Poly(r)).empty());
  const auto parts = homogeneous_components(parse_poly("a11 + e", r));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].first == 0);
  CHECK(parts[0].second == parse_poly("a11", r));
  CHECK(parts[1].first == 1);
  CHECK(parts[1].second == parse_poly("e", r));
  const auto single = homogeneous_components(parse_poly("a11*a22", r));
  REQUIRE(single.size() == 1);
  CHECK(single[0].first == 2);
  std::mt19937_64 rng(5);
  for (int k = 0; k < 50; ++k) {
    const Poly p = oracle::random_poly(rng, r, 3, 5);
    Poly sum(r);
    std::uint64_t last = 0;
    bool first = true;
    for (const auto& [d, c] : homogeneous_components(p)) {
      CHECK(weighted_degree(c) == WeightedDegree::of(d));
      if (!first) CHECK(d > last);
      first = false;
      last = d;
      sum += c;
    }
    CHECK(sum == p);
  }
}

TEST_CASE("monomial orders") {
  const Monomial x2(std::vector<Exponent>{2, 0, 0});
  const Monomial xy(std::vector<Exponent>{1, 1, 0});
  const Monomial y3(std::vector<Exponent>{0, 3, 0});
  const Monomial xz(std::vector<Exponent>{1, 0, 1});
  const Monomial y2(std::vector<Exponent>{0, 2, 0});
  CHECK(MonomialOrder::lex().greater(x2, y3));
  CHECK(MonomialOrder::grevlex().greater(y3, x2));
  CHECK(MonomialOrder::grevlex().greater(xy, xz));
  CHECK(MonomialOrder::grevlex().greater(y2, xz));
  CHECK(MonomialOrder::elimination(1).greater(xz, y3));
  CHECK(MonomialOrder::blocks({1, 2}).greater(Monomial(std::vector<Exponent>{0, 1, 0}),
                                              Monomial(std::vector<Exponent>{0, 0, 5})));
}

TEST_CASE("fractions") {
  auto r = working_ring();
  const Fraction a = parse_fraction("e/a11", r);
  CHECK(to_string(a) == "e/a11");
  const Fraction b = parse_fraction("e^2/(a11*a21)", r);
  CHECK(to_string(b) == "e^2/(a11*a21)");
  CHECK(to_string(a * a / parse_fraction("a21/a11", r)) == "e^2/(a11*a21)");
  const Fraction c = parse_fraction("f2/a22 - f1*a21/(a11*a22)", r);
  CHECK(c.equals(parse_fraction("(a11*f2 - a21*f1)/(a11*a22)", r)));
  CHECK((parse_fraction("a21/a11", r) * parse_fraction("a11", r)).is_polynomial());
  CHECK((a - a).is_zero());
  CHECK(parse_fraction("(a21 + e)/(a21 + e)", r).equals(Fraction(Poly::constant(r, 1))));
  CHECK_THROWS(parse_fraction("e/(a11 - a11)", r));
  CHECK(parse_fraction(to_string(c), r).equals(c));
}

TEST_CASE("substitution and evaluation") {
  auto r = xyz();
  const Poly p = parse_poly("x^2*y + 3*z", r);
  const Poly img = substitute(p, {parse_poly("y", r), parse_poly("x + 1", r), parse_poly("0", r)}, r);
  CHECK(img == parse_poly("y^2*x + y^2", r));
  CHECK(evaluate(p, {2, 3, Rational(1, 3)}) == 13);
  CHECK(parse_poly("x^3*y", r).partial(0) == parse_poly("3*x^2*y", r));
}
