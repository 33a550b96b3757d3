#include <doctest.h>

#include "logdiv/arrangements.hpp"
#include "logdiv/logder.hpp"
#include "logdiv/symalg.hpp"
#include "logdiv/vfilt.hpp"
#include "support/printers.hpp"

using namespace logdiv;

namespace {

std::size_t choose(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

TEST_CASE("generic arrangements") {
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto dn = generic_dn(n);
    INFO("n=", n);
    CHECK(dn.arrangement.hyperplanes.size() == n + 1);
    CHECK(dn.etas.size() == choose(n, 2));
    CHECK(dn.sigmas.size() == choose(n, 3));
    const auto& f = dn.arrangement.f;
    CHECK(f.degree() == static_cast<int>(n + 1));
    CHECK(log_cofactor(f, dn.chi) == Polynomial::constant(n, static_cast<long>(n + 1)));
    for (const auto& e : dn.etas) CHECK(log_cofactor(f, e.field).has_value());
    // Each sigma is a relation among the etas.
    for (const auto& s : dn.sigmas) {
      FreeModuleVector acc(n, n);
      for (std::size_t e = 0; e < dn.etas.size(); ++e) acc += s.relation[e] * dn.etas[e].field;
      CHECK(acc.is_zero());
    }
  }
  const auto d3 = generic_dn(3);
  CHECK(d3.arrangement.f == parse_polynomial("x*y*z*(x+y+z)", 3));
  CHECK(WeylOperator::vector_field(d3.etas[0].field) == parse_operator("x*y*dx - x*y*dy", 3));
  CHECK_THROWS_AS(generic_dn(1), std::invalid_argument);
  CHECK_THROWS_AS(generic_dn(7), std::invalid_argument);
  CHECK_NOTHROW(generic_dn(7, 7));
}

TEST_CASE("arrangement validation") {
  CHECK_THROWS_AS(make_arrangement({parse_polynomial("x", 2), parse_polynomial("2*x", 2)}), std::invalid_argument);
  CHECK_THROWS_AS(make_arrangement({parse_polynomial("x+1", 2)}), std::invalid_argument);
  CHECK_THROWS_AS(make_arrangement({parse_polynomial("x*y", 2)}), std::invalid_argument);
  CHECK(make_arrangement({parse_polynomial("x", 2), parse_polynomial("y", 2)}).f == parse_polynomial("x*y", 2));
}

TEST_CASE("etas form a standard basis with sigma syzygies") {
  for (std::size_t n = 3; n <= 5; ++n) {
    INFO("n=", n);
    CHECK(eta_standard_basis_check(n));
    const auto dn = generic_dn(n);
    // Agrees with a direct syzygy computation.
    CHECK(same_module(syzygies(dn.eta_fields()), dn.sigma_relations()));
  }
  // A wrong sign on one eta breaks the relation module.
  auto bad = generic_dn(4);
  bad.etas[0].field = FreeModuleVector(4, 4) - bad.etas[0].field;
  bad.etas[0].field[0] += Polynomial::variable(4, 0) * Polynomial::variable(4, 1) * fraction(2, 1);
  CHECK_FALSE(eta_standard_basis_check(bad));
}

TEST_CASE("the Euler field splits off") {
  for (std::size_t n = 2; n <= 5; ++n) {
    INFO("n=", n);
    CHECK(euler_splitting_check(n));
  }
  const auto dn = generic_dn(3);
  std::vector<FreeModuleVector> dup{dn.etas[0].field};
  for (const auto& e : dn.etas) dup.push_back(e.field);
  CHECK_FALSE(no_syzygy_involves_first(dup));

  // O^3 / O (x1, x2, x3) for n = 3.
  REQUIRE(dn.sigmas.size() == 1);
  const auto& r = dn.sigmas[0].relation;
  std::vector<Polynomial> entries(r.components().begin(), r.components().end());
  const std::vector<Polynomial> m{Polynomial::variable(3, 0), Polynomial::variable(3, 1), Polynomial::variable(3, 2)};
  const auto g = ideal_basis(entries);
  for (const auto& x : m) CHECK(contains(g, x));
  for (const auto& e : entries) CHECK(e.terms().size() == 1);
}

TEST_CASE("minimal number of generators of Der(log f_n)") {
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto dn = generic_dn(n);
    const auto der = log_derivations(dn.arrangement.f, true);
    INFO("n=", n);
    CHECK(der.generators.size() == 1 + choose(n, 2));
    std::vector<FreeModuleVector> named{dn.chi};
    for (const auto& e : dn.etas) named.push_back(e.field);
    CHECK(same_module(der.generators, named));
  }
}

TEST_CASE("quintic arrangement operator") {
  const auto ex = quintic_example();
  CHECK(ex.arrangement.hyperplanes.size() == 5);
  CHECK(ex.arrangement.f == parse_polynomial("x*y*z*(x+y+z)*(x+2*y+3*z)", 3));
  for (const auto* q : {&ex.q, &ex.q_corrected}) {
    CHECK(q->order() == 2);
    CHECK(q->weight() == 3);
    // Coefficients carry y*z or y^2 factors.
    for (const auto& [b, c] : q->terms()) {
      const bool yz = divide_exact(c, parse_polynomial("y*z", 3)).has_value();
      const bool yy = divide_exact(c, parse_polynomial("y^2", 3)).has_value();
      CHECK((yz || yy));
    }
  }
  const auto& f = ex.arrangement.f;
  CHECK(v_membership(f, ex.q_corrected, 0));
  CHECK_FALSE(v_membership(f, ex.q, 0));
  // Q applied to f is divisible by f.
  CHECK(divide_exact(apply(ex.q_corrected, f), f).has_value());

  // Symbols of the two differ only in the mixed term.
  const auto sq = symbol(ex.q);
  CHECK(sq == parse_polynomial("(x+y+z)*(x+2*y+3*z)*(3*z*y^2*x5^2 + (x+4*y-3*z)*y*z*x5*x6 - 4*y*z^2*x6^2)", 6));
  const auto der = log_derivations(f, true);
  CHECK_FALSE(symbol_residue(der, sq, 2).is_zero());
  CHECK_FALSE(symbol_residue(der, symbol(ex.q_corrected), 2).is_zero());
}
