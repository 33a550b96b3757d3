#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace logdiv {

using Rational = mpq_class;

/// n/d in canonical form.
inline Rational fraction(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

/// Upper bound on the number of ring variables a Monomial can carry.
inline constexpr std::size_t kMaxVars = 32;

struct dimension_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Thrown by the ASCII parsers; `column` is 1-based.
struct parse_error : std::runtime_error {
  parse_error(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"),
        line(line), column(column) {}
  std::size_t line;
  std::size_t column;
};

/// Exponent vector x^a of fixed length n.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t n);
  Monomial(std::initializer_list<unsigned> exps);
  explicit Monomial(std::span<const int> exps);

  std::size_t size() const { return n_; }
  unsigned operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, unsigned v) { e_[i] = static_cast<std::uint16_t>(v); }
  void increment(std::size_t i, unsigned by = 1) { e_[i] = static_cast<std::uint16_t>(e_[i] + by); }

  int degree() const;
  int weighted_degree(std::span<const int> weights) const;
  bool is_one() const;

  /// Bit i set iff variable i occurs; used for fast divisibility rejection.
  std::uint32_t support_mask() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires divides(other) on the divisor side: returns other / *this.
  Monomial quotient_of(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }

  /// Copy into a ring of a different size; `map[i]` is the target slot of variable i.
  Monomial remap(std::size_t new_n, std::span<const std::size_t> map) const;

  std::size_t hash() const;

 private:
  std::array<std::uint16_t, kMaxVars> e_{};
  std::uint8_t n_ = 0;
};

/// Graded reverse lexicographic comparison; returns <0, 0, >0.
int compare_degrevlex(const Monomial& a, const Monomial& b);

/// All monomials of total degree `deg` in n variables, in descending degrevlex order.
std::vector<Monomial> monomials_of_degree(std::size_t n, int deg);

struct Term {
  Monomial mono;
  Rational coef;
};

/// Sparse polynomial over Q; terms kept in strictly descending degrevlex order,
/// no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t n) : n_(n) {}

  static Polynomial constant(std::size_t n, const Rational& c);
  static Polynomial variable(std::size_t n, std::size_t i);
  static Polynomial monomial(const Monomial& m, const Rational& c = 1);
  /// Builds from unordered terms; combines duplicates and drops zeros.
  static Polynomial from_terms(std::size_t n, std::vector<Term> terms);

  std::size_t ring_dim() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  /// Leading term under degrevlex; precondition: nonzero.
  const Term& leading() const { return terms_.front(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  Rational coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& q);
  Polynomial& operator-=(const Polynomial& q);
  Polynomial& operator*=(const Polynomial& q);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(Polynomial p, const Rational& c) { return p *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial mul_term(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned e) const;
  Polynomial derivative(std::size_t i) const;
  /// Divides every coefficient so the leading coefficient becomes 1.
  Polynomial monic() const;

  Rational evaluate_at_origin() const;
  Rational evaluate(std::span<const Rational> point) const;
  /// Substitutes images[i] for x_i; all images must share one ring.
  Polynomial substitute(std::span<const Polynomial> images) const;
  Polynomial remap(std::size_t new_n, std::span<const std::size_t> map) const;

  bool is_homogeneous(std::span<const int> weights = {}) const;
  /// Weighted degree if homogeneous, otherwise nullopt (nullopt for zero too).
  std::optional<int> homogeneous_degree(std::span<const int> weights = {}) const;
  /// Standard-degree components, ascending by degree; empty for zero.
  std::vector<std::pair<int, Polynomial>> homogeneous_components() const;

  std::string to_string() const;
  std::string to_string(std::span<const std::string> names) const;

 private:
  void check_ring(const Polynomial& q) const;

  std::size_t n_ = 0;
  std::vector<Term> terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);

/// g / h if h divides g exactly, otherwise nullopt. Throws on h = 0.
std::optional<Polynomial> divide_exact(const Polynomial& g, const Polynomial& h);

/// Remainder of g under division by the single polynomial h.
Polynomial remainder(const Polynomial& g, const Polynomial& h);

/// Variable names used by the printer: x,y,z,w when n <= 4, else x1..xn.
std::vector<std::string> default_variable_names(std::size_t n);

/// Parses the ASCII grammar. `n` = 0 infers the ring size from the variables used;
/// a larger inferred size than a nonzero `n` is an error.
Polynomial parse_polynomial(std::string_view text, std::size_t n = 0);
/// Parses with the given variable names; the ring has names.size() variables.
Polynomial parse_polynomial(std::string_view text, std::span<const std::string> names);

/// Number of ring variables referenced in `text` (0 if none).
std::size_t infer_ring_dim(std::string_view text);

/// Positive integer weights making p quasi-homogeneous, if any are found.
/// Standard-homogeneous p yields all ones.
std::optional<std::vector<int>> quasi_homogeneous_weights(const Polynomial& p);

}  // namespace logdiv
