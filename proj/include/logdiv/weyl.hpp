#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "logdiv/groebner.hpp"
#include "logdiv/poly.hpp"

namespace logdiv {

struct DescendingMonomial {
  bool operator()(const Monomial& a, const Monomial& b) const { return compare_degrevlex(a, b) > 0; }
};

/// Differential operator sum_b p_b(x) d^b in normal order (coefficients left).
class WeylOperator {
 public:
  using TermMap = std::map<Monomial, Polynomial, DescendingMonomial>;

  WeylOperator() = default;
  explicit WeylOperator(std::size_t n) : n_(n) {}

  static WeylOperator term(const Polynomial& coef, const Monomial& d_exponent);
  static WeylOperator multiplication(const Polynomial& p);
  static WeylOperator derivation(std::size_t n, std::size_t i);
  /// sum_i v_i d_i for a rank-n coefficient vector.
  static WeylOperator vector_field(const FreeModuleVector& v);

  std::size_t ring_dim() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  /// Highest |b| among stored terms; -1 for the zero operator.
  int order() const;
  const TermMap& terms() const { return terms_; }
  Polynomial coefficient(const Monomial& d_exponent) const;

  WeylOperator operator-() const;
  WeylOperator& operator+=(const WeylOperator& o);
  WeylOperator& operator-=(const WeylOperator& o);
  friend WeylOperator operator+(WeylOperator a, const WeylOperator& b) { return a += b; }
  friend WeylOperator operator-(WeylOperator a, const WeylOperator& b) { return a -= b; }
  /// Composition.
  friend WeylOperator operator*(const WeylOperator& a, const WeylOperator& b);
  /// Left multiplication by a function.
  friend WeylOperator operator*(const Polynomial& p, const WeylOperator& a);
  friend bool operator==(const WeylOperator& a, const WeylOperator& b);

  /// Weight deg_w(p_b) - w.b if all terms agree (weights empty = standard degree).
  std::optional<int> weight(std::span<const int> weights = {}) const;

  /// Coefficient vector of a pure order-one operator (no order-zero part).
  std::optional<FreeModuleVector> as_vector_field() const;

  std::string to_string() const;

 private:
  void check_ring(const WeylOperator& o) const;
  void add_term(const Monomial& d_exponent, const Polynomial& coef);

  std::size_t n_ = 0;
  TermMap terms_;
};

Polynomial apply(const WeylOperator& op, const Polynomial& g);
WeylOperator compose(const WeylOperator& p, const WeylOperator& q);
WeylOperator commutator(const WeylOperator& p, const WeylOperator& q);

/// Principal symbol in Q[x_1..x_n, xi_1..xi_n]; throws for the zero operator.
Polynomial symbol(const WeylOperator& op);

/// Names x..., then xi1..xin for printing symbols.
std::vector<std::string> symbol_variable_names(std::size_t n);

/// Operator grammar: polynomial grammar plus dx,dy,dz,dw / dx1..dxN;
/// products are compositions and get normally ordered.
WeylOperator parse_operator(std::string_view text, std::size_t n = 0);

}  // namespace logdiv
