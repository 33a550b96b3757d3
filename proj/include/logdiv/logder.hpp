#pragma once

#include <optional>
#include <span>
#include <vector>

#include "logdiv/groebner.hpp"
#include "logdiv/poly.hpp"
#include "logdiv/weyl.hpp"

namespace logdiv {

/// Weights making f quasi-homogeneous together with its weighted degree.
struct QuasiHomogeneity {
  std::vector<int> weights;
  int degree = 0;
};
std::optional<QuasiHomogeneity> quasi_homogeneity(const Polynomial& f);

/// Grading on vector fields sum a_i d_i: weight of a_i d_i is deg_w(a_i) - w_i.
Grading vector_field_grading(const QuasiHomogeneity& q);

/// A generating set of logarithmic vector fields for the divisor f = 0.
struct DerivationModule {
  Polynomial f;
  /// Coefficient vectors (a_1..a_n) of sum a_i d_i.
  std::vector<FreeModuleVector> generators;
  /// c with sum a_i d_i f = c f, one per generator.
  std::vector<Polynomial> cofactors;
  /// Relations among the generators.
  std::vector<FreeModuleVector> first_syzygies;
  /// Set when f is quasi-homogeneous; all graded computations use it.
  std::optional<QuasiHomogeneity> grading;

  std::size_t ring_dim() const { return f.ring_dim(); }
  std::vector<WeylOperator> operators() const;
  /// Grading of the free module on the generators (shift = weight of each generator).
  std::optional<Grading> generator_grading() const;
};

/// Der(log f) from the syzygies of (d_1 f, ..., d_n f, -f).
/// With `minimal`, a graded minimal generating set is chosen when f is quasi-homogeneous.
DerivationModule log_derivations(const Polynomial& f, bool minimal = false);

/// Vector fields annihilating f (syzygies of the partial derivatives).
DerivationModule ann_theta(const Polynomial& f, bool minimal = false);

/// Builds a module from explicit generators; cofactors and syzygies are computed.
DerivationModule derivation_module(const Polynomial& f, std::vector<FreeModuleVector> generators);

/// Replaces the generators by a graded minimal subset (no-op without grading).
DerivationModule minimalize_generators(const DerivationModule& dm);

enum class EulerStatus { Found, NotEulerHomogeneous, LocalOnly };

/// Vector field chi with chi(f) = f. `LocalOnly` means f lies in the local
/// Jacobian ideal at the origin but has no polynomial lift.
struct EulerField {
  EulerStatus status = EulerStatus::NotEulerHomogeneous;
  std::optional<FreeModuleVector> field;
};
EulerField euler_field(const Polynomial& f);

enum class Freeness { FreeWithBasis, NotFreeAtOrigin, Inconclusive };

struct FreenessVerdict {
  Freeness verdict = Freeness::Inconclusive;
  std::vector<FreeModuleVector> basis;
  Polynomial determinant;
  std::size_t minimal_generators = 0;
};
FreenessVerdict saito_freeness_test(const DerivationModule& dm);

/// True iff Der = O chi (+) <A>: chi and A are logarithmic, {chi} u A generates
/// the module, and no syzygy of (chi, A) has a nonzero chi coefficient.
/// Throws std::invalid_argument if chi is not logarithmic.
bool split_check(const DerivationModule& dm, const FreeModuleVector& chi, std::span<const FreeModuleVector> a);
/// A = generators of dm not proportional to chi.
bool split_check(const DerivationModule& dm, const FreeModuleVector& chi);

struct DeterminantCheck {
  bool nonzero = false;
  Polynomial determinant;
};
/// Determinant of the n x n coefficient matrix of n vector fields.
DeterminantCheck polynomiality_det(std::span<const FreeModuleVector> fields);

/// theta(f) = c f for a coefficient vector theta; nullopt if theta is not logarithmic.
std::optional<Polynomial> log_cofactor(const Polynomial& f, const FreeModuleVector& theta);

/// Every generator satisfies theta(f) = cofactor * f exactly.
bool verify_logarithmic(const DerivationModule& dm);
/// Every bracket of two generators lies in the module.
bool verify_bracket_closure(const DerivationModule& dm);

/// sum_i v_i d_i as an operator and back.
FreeModuleVector field_coefficients(const WeylOperator& op);

}  // namespace logdiv
