#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "logdiv/poly.hpp"
#include "logdiv/weyl.hpp"

namespace logdiv {

/// How divisibility P(x^a f^l) in O f^(l-k) is decided.
/// Auto: global for quasi-homogeneous f, local at the origin otherwise.
enum class MembershipMode { Auto, Global, LocalAtOrigin };

/// P in V_k along f = 0, checking P(x^a f^l) in O f^(l-k) for all |a| + l <= order(P).
bool v_membership(const Polynomial& f, const WeylOperator& p, int k, MembershipMode mode = MembershipMode::Auto);

/// Operators of order <= d and weight w (with respect to the weights of f),
/// stored as an RREF basis over the coordinates x^a d^b.
struct GradedOperatorSpace {
  Polynomial f;
  int order_bound = 0;
  int weight = 0;
  std::vector<int> weights;
  std::vector<WeylOperator> basis;

  std::size_t dimension() const { return basis.size(); }
};

/// Coordinates x^a d^b of weight w and order <= d: highest order first, then descending x^a.
struct OperatorCoordinates {
  std::vector<std::pair<Monomial, Monomial>> terms;  // (d exponent, x exponent)

  std::size_t size() const { return terms.size(); }
  std::optional<std::size_t> index(const Monomial& d_exponent, const Monomial& x_exponent) const;
  std::vector<Rational> coordinates(const WeylOperator& op) const;
  WeylOperator op(std::span<const Rational> coords, std::size_t n) const;

  struct Less {
    bool operator()(const std::pair<Monomial, Monomial>& a, const std::pair<Monomial, Monomial>& b) const;
  };
  std::map<std::pair<Monomial, Monomial>, std::size_t, Less> lookup;
};
OperatorCoordinates operator_coordinates(std::size_t n, std::span<const int> weights, int d, int w);

/// Weight-w, order-<=d piece of V_0. Throws for f that is not quasi-homogeneous.
GradedOperatorSpace v0_graded_basis(const Polynomial& f, int d, int w);

/// The same piece of the algebra generated by O and Der(log f).
GradedOperatorSpace logder_generated_graded(const Polynomial& f, int d, int w);

struct V0Comparison {
  bool equal = false;
  std::size_t v0_dimension = 0;
  std::size_t generated_dimension = 0;
  /// First V_0 basis element outside the generated piece, reduced and monic.
  std::optional<WeylOperator> witness;
};
V0Comparison compare_v0(const Polynomial& f, int d, int w);

/// Weight-w, order-<=d piece of V_k: f^(-k) V_0 for k <= 0, f^(-k) (V_0 cap f^k D) for k >= 1.
GradedOperatorSpace vk_graded_basis(const Polynomial& f, int k, int d, int w);

}  // namespace logdiv
