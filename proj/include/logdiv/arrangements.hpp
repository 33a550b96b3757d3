#pragma once

#include <span>
#include <vector>

#include "logdiv/groebner.hpp"
#include "logdiv/poly.hpp"
#include "logdiv/weyl.hpp"

namespace logdiv {

/// Central arrangement: product of pairwise non-proportional linear forms.
struct Arrangement {
  std::size_t n = 0;
  std::vector<Polynomial> hyperplanes;
  Polynomial f;
};
/// Throws std::invalid_argument for non-linear, zero or proportional forms.
Arrangement make_arrangement(std::vector<Polynomial> forms);

inline constexpr int kDefaultArrangementCap = 6;

/// x_1 ... x_n (x_1 + ... + x_n) with the generators of its logarithmic fields.
struct GenericArrangement {
  struct Eta {
    std::size_t i, j;  // i < j
    FreeModuleVector field;  // x_i x_j (d_i - d_j)
  };
  struct Sigma {
    std::size_t i, j, k;  // i < j < k
    FreeModuleVector relation;  // x_i eta_jk - x_j eta_ik + x_k eta_ij, over the etas
  };
  Arrangement arrangement;
  FreeModuleVector chi;  // sum x_i d_i
  std::vector<Eta> etas;
  std::vector<Sigma> sigmas;

  std::vector<FreeModuleVector> eta_fields() const;
  std::vector<FreeModuleVector> sigma_relations() const;
  std::size_t eta_index(std::size_t i, std::size_t j) const;
};
/// Throws std::invalid_argument for n < 2 or n > cap.
GenericArrangement generic_dn(std::size_t n, int cap = kDefaultArrangementCap);

/// Module order on vector fields: degrevlex, position over term, d_1 < ... < d_n.
TermOrder eta_order(std::size_t n);

/// The etas form a Groebner basis and their syzygies are generated by the sigmas.
bool eta_standard_basis_check(std::size_t n, int cap = kDefaultArrangementCap);
bool eta_standard_basis_check(const GenericArrangement& dn);

/// No syzygy of (first, rest...) has a nonzero first coefficient.
bool no_syzygy_involves_first(std::span<const FreeModuleVector> gens);
/// Der(log f_n) = O chi (+) A_n via the syzygies of (chi, etas).
bool euler_splitting_check(std::size_t n, int cap = kDefaultArrangementCap);

/// The quintic arrangement xyz(x+y+z)(x+2y+3z) with a second order operator.
struct QuinticExample {
  Arrangement arrangement;
  /// (x+y+z)(x+2y+3z)(3zy^2 dy^2 + (x+4y-3z)yz dy dz - 4yz^2 dz^2)
  WeylOperator q;
  /// q with the sign of its dy dz term reversed; only this one lies in V_0.
  WeylOperator q_corrected;
};
QuinticExample quintic_example();

}  // namespace logdiv
