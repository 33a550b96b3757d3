#include <doctest.h>

#include "logdiv/poly.hpp"
#include "support/oracles.hpp"
#include "support/printers.hpp"
#include "support/random.hpp"

using namespace logdiv;
using logdiv::testing::Random;

namespace {
Polynomial P(const char* s, std::size_t n = 0) { return parse_polynomial(s, n); }
}  // namespace

TEST_CASE("difference of squares") {
  CHECK(P("(x+y)*(x-y)") == P("x^2-y^2"));
  CHECK((P("x+y") * Polynomial(2)).is_zero());
}

TEST_CASE("expansion agrees with schoolbook product") {
  const auto x1 = P("x1", 3), x2 = P("x2", 3), x3 = P("x3", 3);
  const auto sum = x1 + x2 + x3;
  const Polynomial f = x1 * x2 * x3 * sum;
  CHECK(f.size() == 3);
  auto expect = testing::schoolbook_product(testing::to_map(x1), testing::to_map(x2));
  expect = testing::schoolbook_product(expect, testing::to_map(x3));
  expect = testing::schoolbook_product(expect, testing::to_map(sum));
  CHECK(testing::to_map(f) == expect);

  Random rng(11);
  for (int i = 0; i < 50; ++i) {
    const auto p = rng.polynomial(3, 4, 6), q = rng.polynomial(3, 4, 6);
    CHECK(testing::to_map(p * q) == testing::schoolbook_product(testing::to_map(p), testing::to_map(q)));
  }
}

TEST_CASE("exact division") {
  CHECK(divide_exact(P("x^2*y"), P("x*y")) == P("x", 2));
  CHECK_FALSE(divide_exact(P("x^2+y^2"), P("x", 2)).has_value());
  const auto f3 = P("x1*x2*x3*(x1+x2+x3)");
  CHECK(divide_exact(f3 * f3, f3) == f3);
  CHECK_THROWS_AS(divide_exact(f3, Polynomial(3)), std::invalid_argument);
  CHECK(remainder(P("x^2+y^2"), P("x", 2)) == P("y^2", 2));
}

TEST_CASE("constant term and homogeneous components") {
  CHECK(P("3+x").evaluate_at_origin() == 3);
  const auto comps = P("x^2+x*y+z").homogeneous_components();
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].first == 1);
  CHECK(comps[0].second == P("z", 3));
  CHECK(comps[1].first == 2);
  CHECK(comps[1].second == P("x^2+x*y", 3));
  CHECK(Polynomial(3).evaluate_at_origin() == 0);
  CHECK(Polynomial(3).homogeneous_components().empty());
}

TEST_CASE("ring mismatch is rejected") {
  CHECK_THROWS_AS(P("x", 1) + P("x", 2), dimension_error);
  CHECK_THROWS_AS(P("x", 1) * P("x", 2), dimension_error);
}

TEST_CASE("ring axioms on random triples") {
  Random rng(1);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
    const auto a = rng.polynomial(n, 3, 4), b = rng.polynomial(n, 3, 4), c = rng.polynomial(n, 3, 4);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("divide_exact inverts multiplication") {
  Random rng(2);
  for (int i = 0; i < 100; ++i) {
    const auto g = rng.polynomial(3, 3, 4);
    const auto h = rng.nonzero_polynomial(3, 3, 4);
    CHECK(divide_exact(g * h, h) == g);
  }
}

TEST_CASE("canonical form is independent of construction order") {
  Random rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto a = rng.polynomial(3, 3, 4), b = rng.polynomial(3, 3, 4), c = rng.polynomial(3, 3, 4);
    const Polynomial left = a * b + a * c - c * b;
    Polynomial right = a * (c + b);
    right -= b * c;
    CHECK(left == right);
    CHECK(left.terms().size() == right.terms().size());
    for (std::size_t k = 0; k < left.size(); ++k) CHECK(left.terms()[k].mono == right.terms()[k].mono);
  }
}

TEST_CASE("parser and printer round-trip") {
  Random rng(4);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 6));
    const auto p = rng.polynomial(n, 4, 5);
    CHECK(parse_polynomial(p.to_string(), n) == p);
  }
  CHECK(P("2*x^2*y - 1/3*z").to_string() == "2*x^2*y - 1/3*z");
  CHECK(P("-(x+1)^2", 1) == P("-x^2-2*x-1", 1));
  CHECK(P("2 x y", 2) == P("2*x*y", 2));
  CHECK(P("x/2", 1) == P("1/2*x", 1));
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_polynomial("x + * y");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.line == 1);
    CHECK(e.column == 5);
  }
  CHECK_THROWS_AS(parse_polynomial("x/y"), parse_error);
  CHECK_THROWS_AS(parse_polynomial("dx"), parse_error);
  CHECK_THROWS_AS(parse_polynomial("(x"), parse_error);
  CHECK_THROWS_AS(parse_polynomial("x1*x5", 3), dimension_error);
}

TEST_CASE("derivatives, substitution and evaluation") {
  CHECK(P("x^3*y").derivative(0) == P("3*x^2*y"));
  const std::vector<Polynomial> images{P("x+y", 2), P("x-y", 2)};
  CHECK(P("x*y", 2).substitute(images) == P("x^2-y^2", 2));
  const std::vector<Rational> pt{Rational(1, 2), Rational(3)};
  CHECK(P("x*y+1", 2).evaluate(pt) == Rational(5, 2));
}

TEST_CASE("quasi-homogeneous weights") {
  CHECK(quasi_homogeneous_weights(P("x^3+y^3+z^3")) == std::vector<int>{1, 1, 1});
  const auto w = quasi_homogeneous_weights(P("x^5+y^3+z^2"));
  REQUIRE(w.has_value());
  CHECK(*w == std::vector<int>{6, 10, 15});
  CHECK_FALSE(quasi_homogeneous_weights(P("x^4+y^5+x^2*y^4")).has_value());
}

TEST_CASE("parsing with custom variable names") {
  const std::vector<std::string> names{"x", "y", "T1", "T2"};
  const auto p = parse_polynomial("y*T1 - x*T2^2 + 3", names);
  CHECK(p == parse_polynomial("y*z - x*w^2 + 3", 4));
  CHECK(parse_polynomial(p.to_string(names), names) == p);
  CHECK_THROWS_AS(parse_polynomial("T3", names), parse_error);
  CHECK_THROWS_AS(parse_polynomial("z", names), parse_error);
}
