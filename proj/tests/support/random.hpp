#pragma once

// Seeded generators for property tests.

#include <random>

#include "logdiv/groebner.hpp"
#include "logdiv/poly.hpp"
#include "logdiv/weyl.hpp"

namespace logdiv::testing {

class Random {
 public:
  explicit Random(unsigned seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational coefficient() {
    int num = uniform(-5, 5);
    if (num == 0) num = 1;
    Rational c(num, uniform(1, 3));
    c.canonicalize();
    return c;
  }

  Monomial monomial(std::size_t n, int max_deg) {
    Monomial m(n);
    int left = uniform(0, max_deg);
    for (std::size_t i = 0; i < n && left > 0; ++i) {
      const int e = uniform(0, left);
      m.set(i, static_cast<unsigned>(e));
      left -= e;
    }
    return m;
  }

  Polynomial polynomial(std::size_t n, int max_deg, int max_terms) {
    std::vector<Term> ts;
    const int k = uniform(1, max_terms);
    for (int i = 0; i < k; ++i) ts.push_back({monomial(n, max_deg), coefficient()});
    return Polynomial::from_terms(n, std::move(ts));
  }

  Polynomial nonzero_polynomial(std::size_t n, int max_deg, int max_terms) {
    for (;;) {
      Polynomial p = polynomial(n, max_deg, max_terms);
      if (!p.is_zero()) return p;
    }
  }

  WeylOperator weyl_operator(std::size_t n, int max_order, int max_deg, int max_terms) {
    WeylOperator op(n);
    const int k = uniform(1, max_terms);
    for (int i = 0; i < k; ++i) op += WeylOperator::term(polynomial(n, max_deg, 2), monomial(n, max_order));
    return op;
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace logdiv::testing
