#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "logdiv/poly.hpp"

namespace logdiv {

/// Element of the free module R^m over R = Q[x_1..x_n].
class FreeModuleVector {
 public:
  FreeModuleVector() = default;
  FreeModuleVector(std::size_t rank, std::size_t ring_dim);
  explicit FreeModuleVector(std::vector<Polynomial> components);

  static FreeModuleVector unit(std::size_t rank, std::size_t ring_dim, std::size_t i);

  std::size_t rank() const { return comps_.size(); }
  std::size_t ring_dim() const { return n_; }
  const Polynomial& operator[](std::size_t i) const { return comps_[i]; }
  Polynomial& operator[](std::size_t i) { return comps_[i]; }
  const std::vector<Polynomial>& components() const { return comps_; }
  bool is_zero() const;

  FreeModuleVector& operator+=(const FreeModuleVector& o);
  FreeModuleVector& operator-=(const FreeModuleVector& o);
  friend FreeModuleVector operator+(FreeModuleVector a, const FreeModuleVector& b) { return a += b; }
  friend FreeModuleVector operator-(FreeModuleVector a, const FreeModuleVector& b) { return a -= b; }
  friend FreeModuleVector operator*(const Polynomial& p, const FreeModuleVector& v);
  friend bool operator==(const FreeModuleVector& a, const FreeModuleVector& b) = default;

  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  std::vector<Polynomial> comps_;
};

/// Monomial order on R, extended to module terms x^a e_c.
///
/// Monomials: weighted degree, then reverse lexicographic (or pure lex).
/// A nonzero `elimination_block` k compares variables [0,k) first as a block.
/// Module terms: components [0, priority_components) dominate all others; then
/// either term-over-position (shifted degree, monomial, component) or
/// position-over-term. Higher component index is larger.
struct TermOrder {
  enum class Kind { DegRevLex, Lex };
  enum class Position { TermOverPosition, PositionOverTerm };

  Kind kind = Kind::DegRevLex;
  std::vector<int> weights;
  std::size_t elimination_block = 0;
  Position position = Position::TermOverPosition;
  std::vector<int> shifts;
  std::size_t priority_components = 0;

  static TermOrder degrevlex(std::vector<int> weights = {});
  static TermOrder lex();
  static TermOrder block(std::size_t k, std::vector<int> weights = {});

  int compare_monomials(const Monomial& a, const Monomial& b) const;
  int compare(const Monomial& a, std::size_t ca, const Monomial& b, std::size_t cb) const;
  /// Weighted degree plus the component shift.
  int degree(const Monomial& m, std::size_t comp) const;
};

namespace detail {
struct MTerm {
  Monomial mono;
  std::uint32_t comp;
  Rational coef;
};
using Vec = std::vector<MTerm>;
}  // namespace detail

/// Reduced Groebner basis of a submodule of R^m (m = 1 for ideals).
class GroebnerBasis {
 public:
  GroebnerBasis() = default;

  const std::vector<FreeModuleVector>& generators() const { return gens_; }
  const TermOrder& order() const { return order_; }
  bool reduced() const { return true; }
  std::size_t rank() const { return rank_; }
  std::size_t ring_dim() const { return n_; }
  std::size_t size() const { return gens_.size(); }
  bool empty() const { return gens_.empty(); }
  bool is_unit_ideal() const;

  /// Rank-1 convenience: generators as polynomials.
  std::vector<Polynomial> polynomials() const;

  const std::vector<detail::Vec>& internal() const { return elems_; }

 private:
  friend GroebnerBasis make_groebner_basis(std::size_t, std::size_t, TermOrder, std::vector<detail::Vec>);
  std::size_t rank_ = 0;
  std::size_t n_ = 0;
  TermOrder order_;
  std::vector<detail::Vec> elems_;
  std::vector<FreeModuleVector> gens_;
};

/// Reduced Groebner basis of the submodule generated by `gens` (uniform rank).
/// `rank`/`ring_dim` are only needed when `gens` may be empty.
GroebnerBasis buchberger(std::span<const FreeModuleVector> gens, const TermOrder& order = {},
                         std::size_t rank = 0, std::size_t ring_dim = 0);
GroebnerBasis ideal_basis(std::span<const Polynomial> gens, const TermOrder& order = {});

FreeModuleVector normal_form(const FreeModuleVector& v, const GroebnerBasis& gb);
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);
bool contains(const GroebnerBasis& gb, const FreeModuleVector& v);
bool contains(const GroebnerBasis& gb, const Polynomial& p);
/// Mutual containment of the submodules generated by a and b.
bool same_module(std::span<const FreeModuleVector> a, std::span<const FreeModuleVector> b,
                 const TermOrder& order = {});

/// Buchberger's criterion on `gens` exactly as given: every S-vector of two
/// elements with the same leading component reduces to zero modulo `gens`.
bool is_groebner_basis(std::span<const FreeModuleVector> gens, const TermOrder& order);

/// Degree data for graded computations: variable weights and component shifts.
/// A vector is homogeneous of degree d if every term x^a e_c has w.a + shift_c = d.
struct Grading {
  std::vector<int> weights;
  std::vector<int> shifts;
  int degree(const Monomial& m, std::size_t comp) const;
};
std::optional<int> homogeneous_degree(const FreeModuleVector& v, const Grading& g);

/// Generating set of the first syzygy module of `gens`. If the generators are
/// homogeneous for `grading`, the computation is graded and so are the results.
std::vector<FreeModuleVector> syzygies(std::span<const FreeModuleVector> gens, const Grading& grading = {});
std::vector<FreeModuleVector> syzygies(std::span<const Polynomial> gens, const Grading& grading = {});

/// Coefficients c with v = sum c_i gens_i, or nullopt if v is not in the module.
std::optional<std::vector<Polynomial>> lift(const FreeModuleVector& v, std::span<const FreeModuleVector> gens,
                                            const Grading& grading = {});

/// Graded minimal generating subset (Nakayama), scanning by ascending degree.
/// nullopt if some generator is not homogeneous for `grading`.
std::optional<std::vector<FreeModuleVector>> minimalize(std::span<const FreeModuleVector> gens,
                                                        const Grading& grading);

/// (N : g) = {v | g v in N} for the submodule N generated by `gens`.
GroebnerBasis module_quotient(std::span<const FreeModuleVector> gens, const Polynomial& g,
                              const TermOrder& order = {}, std::size_t rank = 0);

GroebnerBasis ideal_quotient(const GroebnerBasis& ideal, const Polynomial& g);
GroebnerBasis saturation(const GroebnerBasis& ideal, const Polynomial& g);
/// I intersected with the subring in the variables not listed in `vars`.
GroebnerBasis eliminate(const GroebnerBasis& ideal, std::span<const std::size_t> vars);
/// Same, starting from generators; the result is a basis for `order` (its weights
/// also grade the elimination order).
GroebnerBasis eliminate(std::span<const Polynomial> gens, std::span<const std::size_t> vars,
                        const TermOrder& order = {});

/// Total order on vectors: compares sorted terms lexicographically, then coefficients.
int compare_vectors(const FreeModuleVector& a, const FreeModuleVector& b, const TermOrder& order);

inline constexpr int kUnitIdealCodim = std::numeric_limits<int>::max();

/// n - dim R/I from the leading-term ideal; kUnitIdealCodim for I = <1>.
int codim(const GroebnerBasis& ideal);

/// True iff g lies in I localized at the origin: some element of (I : g) is a unit there.
bool local_membership_at_origin(const Polynomial& g, const GroebnerBasis& ideal);

}  // namespace logdiv
