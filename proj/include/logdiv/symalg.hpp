#pragma once

#include <optional>
#include <string>
#include <vector>

#include "logdiv/groebner.hpp"
#include "logdiv/logder.hpp"
#include "logdiv/poly.hpp"

namespace logdiv {

/// Sym_R M = R[T_1..T_m]/J for M generated by m vector fields.
/// Polynomials live in Q[x_1..x_n, T_1..T_m] (x first).
struct SymPresentation {
  std::size_t base_dim = 0;
  std::size_t module_rank = 0;
  std::vector<Polynomial> relations;
  /// Weights of x_1..x_n, T_1..T_m making the relations homogeneous (empty if ungraded).
  std::vector<int> weights;
  /// Coefficient vectors of the module generators and their syzygies.
  std::vector<FreeModuleVector> generators;
  std::vector<FreeModuleVector> syzygies;
  /// Weight of each generator (graded case only).
  std::vector<int> generator_weights;

  std::size_t ring_dim() const { return base_dim + module_rank; }
  std::vector<std::string> variable_names() const;
};

SymPresentation sym_presentation(const DerivationModule& dm);

/// Relations among the symbols sigma(theta_j) in Q[x, T].
struct ReesKernel {
  std::vector<Polynomial> relations;
  GroebnerBasis basis;
};
/// By eliminating xi from <T_j - sigma(theta_j)>.
ReesKernel rees_kernel(const DerivationModule& dm);
/// By saturating J at a nonzero maximal minor of the generator matrix.
ReesKernel rees_kernel_by_saturation(const SymPresentation& sp);

/// True iff J = Q, i.e. Sym -> Rees is injective.
bool pi_injectivity_test(const SymPresentation& sp, const ReesKernel& rk);

/// Degree-k piece of Sym as R^r / N, r = number of degree-k T-monomials.
struct SymPiece {
  std::vector<Monomial> t_monomials;  // in m variables, descending
  std::vector<FreeModuleVector> relations;
  Grading grading;
};
SymPiece sym_piece(const SymPresentation& sp, int k);

struct ZeroDivisorWitness {
  std::size_t variable = 0;
  /// Normal form modulo the relations, as an element of Q[x, T] of T-degree k.
  Polynomial element;
  FreeModuleVector vector;
};
struct TorsionResult {
  bool torsion_free = true;
  /// One entry per variable that is a zero divisor, ascending by variable.
  std::vector<ZeroDivisorWitness> witnesses;
};
/// Kernel of multiplication by each x_i on Sym^k.
TorsionResult torsion_test_symk(const SymPresentation& sp, int k);

struct GradeCertificate {
  bool shape_ok = false;
  std::optional<FreeModuleVector> syzygy;
  /// kUnitIdealCodim when the entries generate the unit ideal.
  int grade = 0;
  int required = 0;
  bool certified = false;
};
/// Requires a resolution 0 -> R -> R^m -> A -> 0 and grade of the entry ideal >= dimZ + 3.
GradeCertificate grade_criterion(const DerivationModule& a, int dim_z);

/// Graded module R^r / <relations>; depth at the origin via n - projective dimension.
/// Throws std::invalid_argument for ungraded input; nullopt for the zero module.
std::optional<int> depth_via_resolution(std::size_t rank, std::vector<FreeModuleVector> relations,
                                        const Grading& grading, std::size_t ring_dim);
std::optional<int> depth_via_resolution(const SymPiece& piece, std::size_t ring_dim);

/// Normal form of a symbol of xi-degree k (in Q[x, xi]) against the R-span of
/// k-fold products of the generators' symbols; zero iff it lies in alpha(Sym^k).
FreeModuleVector symbol_residue(const DerivationModule& dm, const Polynomial& symbol, int k);

/// Splits Der(log f) as chi plus a complement taken from its graded minimal generators.
std::vector<FreeModuleVector> complement_of_euler(const DerivationModule& der, const FreeModuleVector& chi);

enum class Verdict { Certified, RefutedWithWitness, Inconclusive };
std::string to_string(Verdict v);

struct RouteReport {
  std::string name;  // "annihilator" or "complement"
  std::vector<FreeModuleVector> module;
  bool split = false;
  GradeCertificate grade;
  std::vector<std::pair<int, TorsionResult>> torsion;  // per k
  std::vector<std::pair<int, std::optional<int>>> depth;  // per k
  bool certified = false;
};

struct CriterionOptions {
  int dim_z = 0;
  int max_sym_degree = 2;
  bool depth_checks = true;
};

struct CriterionReport {
  Polynomial f;
  bool homogeneous = false;
  EulerField euler;
  FreenessVerdict freeness;
  std::vector<RouteReport> routes;
  Verdict verdict = Verdict::Inconclusive;
  /// Named result the verdict rests on.
  std::string basis;
  std::string claim;
};
CriterionReport criterion(const Polynomial& f, const CriterionOptions& opts = {});

}  // namespace logdiv
