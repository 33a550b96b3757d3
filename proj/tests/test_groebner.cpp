#include <doctest.h>

#include "logdiv/groebner.hpp"
#include "support/oracles.hpp"
#include "support/printers.hpp"
#include "support/random.hpp"

using namespace logdiv;
using logdiv::testing::Random;

namespace {

Polynomial P(const char* s, std::size_t n) { return parse_polynomial(s, n); }

GroebnerBasis ideal(std::initializer_list<const char*> gens, std::size_t n) {
  std::vector<Polynomial> ps;
  for (const char* g : gens) ps.push_back(P(g, n));
  return ideal_basis(ps);
}

FreeModuleVector vec(std::initializer_list<const char*> comps, std::size_t n) {
  std::vector<Polynomial> ps;
  for (const char* c : comps) ps.push_back(P(c, n));
  return FreeModuleVector(ps);
}

bool same_ideal(const GroebnerBasis& gb, std::initializer_list<const char*> gens, std::size_t n) {
  const GroebnerBasis other = ideal(gens, n);
  return gb.polynomials() == other.polynomials();
}

FreeModuleVector combine(std::span<const Polynomial> coeffs, std::span<const FreeModuleVector> gens) {
  FreeModuleVector acc(gens.front().rank(), gens.front().ring_dim());
  for (std::size_t i = 0; i < gens.size(); ++i) acc += coeffs[i] * gens[i];
  return acc;
}

}  // namespace

TEST_CASE("monomial ideal is its own basis") {
  const auto gb = ideal({"x^2", "x*y"}, 2);
  const auto ps = gb.polynomials();
  REQUIRE(ps.size() == 2);
  CHECK(ps[0] == P("x*y", 2));
  CHECK(ps[1] == P("x^2", 2));
  CHECK(is_groebner_basis(gb.generators(), gb.order()));
}

TEST_CASE("principal ideal basis is the monic generator") {
  Random rng(5);
  for (int i = 0; i < 30; ++i) {
    const auto p = rng.nonzero_polynomial(3, 3, 4);
    const std::vector<Polynomial> g{p};
    const auto gb = ideal_basis(g);
    REQUIRE(gb.size() == 1);
    CHECK(gb.polynomials()[0] == p.monic());
  }
}

TEST_CASE("normal forms") {
  const auto gb = ideal({"x^2"}, 1);
  CHECK(normal_form(P("x", 1), gb) == P("x", 1));
  CHECK(normal_form(P("x^3+x^2", 1), gb).is_zero());
  const auto g2 = ideal({"x^2+y", "x*y-1"}, 2);
  CHECK(contains(g2, P("(x^2+y)*(x+3*y) + (x*y-1)*y^2", 2)));
  CHECK_THROWS_AS(normal_form(vec({"x", "y"}, 2), g2), dimension_error);
}

TEST_CASE("zero module yields empty basis") {
  const std::vector<Polynomial> zero{Polynomial(2)};
  const auto gb = ideal_basis(zero);
  CHECK(gb.empty());
  CHECK(codim(gb) == 0);
  CHECK(normal_form(P("x", 2), gb) == P("x", 2));
}

TEST_CASE("Koszul syzygy of two variables") {
  const std::vector<Polynomial> gens{P("x", 2), P("y", 2)};
  const auto syz = syzygies(gens);
  REQUIRE(syz.size() == 1);
  const std::vector<FreeModuleVector> expect{vec({"y", "-x"}, 2)};
  CHECK(same_module(syz, expect));
}

TEST_CASE("gradient of the Fermat cubic has only Koszul syzygies") {
  const auto f = P("x^3+y^3+z^3", 3);
  const std::vector<Polynomial> grad{f.derivative(0), f.derivative(1), f.derivative(2)};
  CHECK(codim(ideal_basis(grad)) == 3);
  const auto syz = syzygies(grad);
  for (const auto& s : syz) {
    Polynomial acc(3);
    for (std::size_t i = 0; i < 3; ++i) acc += s[i] * grad[i];
    CHECK(acc.is_zero());
  }
  std::vector<FreeModuleVector> koszul;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      FreeModuleVector k(3, 3);
      k[i] = grad[j];
      k[j] = -grad[i];
      koszul.push_back(k);
    }
  CHECK(same_module(syz, koszul));
}

TEST_CASE("quotient, saturation, elimination") {
  CHECK(same_ideal(ideal_quotient(ideal({"x^2"}, 1), P("x", 1)), {"x"}, 1));
  CHECK(same_ideal(saturation(ideal({"x^2*y"}, 2), P("x", 2)), {"y"}, 2));
  const std::vector<std::size_t> xs{0};
  const auto el = eliminate(ideal({"y-x^2"}, 2), xs);
  CHECK(el.empty());
  const auto el2 = eliminate(ideal({"z-x^2", "w-x^3"}, 4), std::vector<std::size_t>{0});
  CHECK(same_ideal(el2, {"z^3-w^2"}, 4));
  CHECK_THROWS_AS(ideal_quotient(ideal({"x"}, 1), Polynomial(1)), std::invalid_argument);
}

TEST_CASE("codimension") {
  CHECK(codim(ideal({"x1", "x2", "x3", "x4", "x5"}, 5)) == 5);
  CHECK(codim(ideal({"x1", "x1*x2"}, 3)) == 1);
  CHECK(codim(ideal({"x*y", "x*z"}, 3)) == 1);
  CHECK(codim(ideal({"1+x"}, 2)) == 1);
  CHECK(codim(ideal({"x", "1+x"}, 2)) == kUnitIdealCodim);
  CHECK(ideal({"x", "1+x"}, 2).is_unit_ideal());
}

TEST_CASE("membership in the local ring at the origin") {
  CHECK(local_membership_at_origin(P("x*(1+y)", 2), ideal({"x"}, 2)));
  CHECK(contains(ideal({"x"}, 2), P("x*(1+y)", 2)));
  CHECK(local_membership_at_origin(P("x", 1), ideal({"x*(1+x)"}, 1)));
  CHECK_FALSE(divide_exact(P("x", 1), P("x*(1+x)", 1)).has_value());
  CHECK_FALSE(local_membership_at_origin(P("y", 2), ideal({"x"}, 2)));
}

TEST_CASE("module quotient and lift") {
  const std::vector<FreeModuleVector> gens{vec({"x^2", "0"}, 2), vec({"x*y", "y"}, 2)};
  const auto v = vec({"x^3*y+x^2*y^2", "x*y^2"}, 2);
  const auto c = lift(v, gens);
  REQUIRE(c.has_value());
  CHECK(combine(*c, gens) == v);
  CHECK_FALSE(lift(vec({"x", "0"}, 2), gens).has_value());
  const auto q = module_quotient(gens, P("x", 2));
  for (const auto& g : q.generators()) CHECK(contains(buchberger(gens), P("x", 2) * g));
  CHECK(contains(q, vec({"x", "0"}, 2)));
}

TEST_CASE("graded minimalization drops redundant generators") {
  const std::vector<FreeModuleVector> gens{vec({"x"}, 2), vec({"y"}, 2), vec({"x*y+x^2"}, 2), vec({"x+y"}, 2)};
  const auto m = minimalize(gens, Grading{});
  REQUIRE(m.has_value());
  CHECK(m->size() == 2);
  CHECK_FALSE(minimalize(std::vector<FreeModuleVector>{vec({"x+y^2"}, 2)}, Grading{}).has_value());
}

TEST_CASE("orders: lex and position-over-term") {
  TermOrder lex = TermOrder::lex();
  CHECK(lex.compare_monomials(Monomial{1, 0}, Monomial{0, 5}) > 0);
  TermOrder drl = TermOrder::degrevlex();
  CHECK(drl.compare_monomials(Monomial{1, 0}, Monomial{0, 5}) < 0);
  CHECK(drl.compare_monomials(Monomial{1, 1, 0}, Monomial{1, 0, 1}) > 0);
  const std::vector<Polynomial> gens{P("x^2+y", 2), P("x*y-1", 2)};
  std::vector<FreeModuleVector> vs;
  for (const auto& g : gens) vs.push_back(FreeModuleVector(std::vector<Polynomial>{g}));
  const auto a = buchberger(vs, lex);
  const auto b = buchberger(vs, drl);
  CHECK(is_groebner_basis(a.generators(), lex));
  for (const auto& g : a.generators()) CHECK(contains(b, g));
  for (const auto& g : b.generators()) CHECK(contains(a, g));
  TermOrder pot;
  pot.position = TermOrder::Position::PositionOverTerm;
  const std::vector<FreeModuleVector> mv{vec({"x", "y"}, 2), vec({"y", "x"}, 2)};
  const auto c = buchberger(mv, pot);
  CHECK(is_groebner_basis(c.generators(), pot));
  CHECK(same_module(c.generators(), mv));
}

TEST_CASE("property: S-vectors vanish and membership matches the span oracle") {
  Random rng(7);
  int members = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
    std::vector<Polynomial> gens;
    const int k = rng.uniform(1, 3);
    for (int i = 0; i < k; ++i) gens.push_back(rng.nonzero_polynomial(n, 3, 3));
    const auto gb = ideal_basis(gens);
    CHECK(is_groebner_basis(gb.generators(), gb.order()));

    Polynomial g = rng.polynomial(n, 3, 3);
    if (trial % 2 == 0) {
      g = Polynomial(n);
      for (const auto& h : gens) g += rng.polynomial(n, 1, 2) * h;
    }
    const bool in = contains(gb, g);
    members += in;
    if (in) {
      // The oracle needs a large enough degree box to see the certificate.
      CHECK(testing::span_membership(g, gens, 8));
    } else {
      CHECK_FALSE(testing::span_membership(g, gens, 5));
    }
    const auto nf = normal_form(g, gb);
    CHECK(normal_form(nf, gb) == nf);
    CHECK(contains(gb, g - nf));
    const Polynomial h = rng.polynomial(n, 3, 3);
    const Rational c = rng.coefficient();
    CHECK(normal_form(g + c * h, gb) == nf + c * normal_form(h, gb));
  }
  CHECK(members >= 50);
}

TEST_CASE("property: syzygies annihilate the generators") {
  Random rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 3));
    const std::size_t rank = static_cast<std::size_t>(rng.uniform(1, 2));
    std::vector<FreeModuleVector> gens;
    const int k = rng.uniform(2, 4);
    for (int i = 0; i < k; ++i) {
      FreeModuleVector v(rank, n);
      for (std::size_t c = 0; c < rank; ++c) v[c] = rng.polynomial(n, 2, 2);
      if (!v.is_zero()) gens.push_back(v);
    }
    if (gens.size() < 2) continue;
    for (const auto& s : syzygies(gens)) CHECK(combine(s.components(), gens).is_zero());
  }
}
