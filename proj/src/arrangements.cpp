#include "logdiv/arrangements.hpp"

#include <stdexcept>
#include <string>

namespace logdiv {

namespace {

bool is_linear_form(const Polynomial& p) {
  if (p.is_zero()) return false;
  for (const auto& t : p.terms())
    if (t.mono.degree() != 1) return false;
  return true;
}

bool proportional(const Polynomial& a, const Polynomial& b) {
  return a.monic() == b.monic();
}

FreeModuleVector unit_field(std::size_t n, std::size_t i, const Polynomial& c) {
  FreeModuleVector v(n, n);
  v[i] = c;
  return v;
}

}  // namespace

Arrangement make_arrangement(std::vector<Polynomial> forms) {
  if (forms.empty()) throw std::invalid_argument("arrangement needs at least one hyperplane");
  const std::size_t n = forms.front().ring_dim();
  Polynomial f = Polynomial::constant(n, 1);
  for (std::size_t a = 0; a < forms.size(); ++a) {
    if (forms[a].ring_dim() != n) throw dimension_error("hyperplanes live in different rings");
    if (!is_linear_form(forms[a])) throw std::invalid_argument("not a nonzero linear form: " + forms[a].to_string());
    for (std::size_t b = 0; b < a; ++b)
      if (proportional(forms[a], forms[b]))
        throw std::invalid_argument("proportional hyperplanes: " + forms[b].to_string() + ", " + forms[a].to_string());
    f *= forms[a];
  }
  return {n, std::move(forms), std::move(f)};
}

std::vector<FreeModuleVector> GenericArrangement::eta_fields() const {
  std::vector<FreeModuleVector> out;
  for (const auto& e : etas) out.push_back(e.field);
  return out;
}

std::vector<FreeModuleVector> GenericArrangement::sigma_relations() const {
  std::vector<FreeModuleVector> out;
  for (const auto& s : sigmas) out.push_back(s.relation);
  return out;
}

std::size_t GenericArrangement::eta_index(std::size_t i, std::size_t j) const {
  for (std::size_t e = 0; e < etas.size(); ++e)
    if (etas[e].i == i && etas[e].j == j) return e;
  throw std::out_of_range("no eta for (" + std::to_string(i) + ", " + std::to_string(j) + ")");
}

GenericArrangement generic_dn(std::size_t n, int cap) {
  if (n < 2) throw std::invalid_argument("generic arrangement needs n >= 2");
  if (static_cast<int>(n) > cap) throw std::invalid_argument("n exceeds the arrangement cap " + std::to_string(cap));
  std::vector<Polynomial> forms;
  Polynomial sum(n);
  for (std::size_t i = 0; i < n; ++i) {
    forms.push_back(Polynomial::variable(n, i));
    sum += forms.back();
  }
  forms.push_back(sum);

  GenericArrangement g;
  g.arrangement = make_arrangement(std::move(forms));
  g.chi = FreeModuleVector(n, n);
  for (std::size_t i = 0; i < n; ++i) g.chi[i] = Polynomial::variable(n, i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Polynomial c = Polynomial::variable(n, i) * Polynomial::variable(n, j);
      g.etas.push_back({i, j, unit_field(n, i, c) - unit_field(n, j, c)});
    }
  const std::size_t m = g.etas.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        FreeModuleVector r(m, n);
        r[g.eta_index(j, k)] = Polynomial::variable(n, i);
        r[g.eta_index(i, k)] = -Polynomial::variable(n, j);
        r[g.eta_index(i, j)] = Polynomial::variable(n, k);
        g.sigmas.push_back({i, j, k, std::move(r)});
      }
  return g;
}

TermOrder eta_order(std::size_t n) {
  TermOrder o;
  o.weights.assign(n, 1);
  o.position = TermOrder::Position::PositionOverTerm;
  return o;
}

bool eta_standard_basis_check(const GenericArrangement& dn) {
  const std::size_t n = dn.arrangement.n;
  const auto etas = dn.eta_fields();
  if (!is_groebner_basis(etas, eta_order(n))) return false;
  const auto syz = syzygies(etas);
  const auto sigmas = dn.sigma_relations();
  if (syz.empty() || sigmas.empty()) return syz.empty() && sigmas.empty();
  return same_module(syz, sigmas);
}

bool eta_standard_basis_check(std::size_t n, int cap) { return eta_standard_basis_check(generic_dn(n, cap)); }

bool no_syzygy_involves_first(std::span<const FreeModuleVector> gens) {
  if (gens.empty()) return true;
  for (const auto& s : syzygies(gens))
    if (!s[0].is_zero()) return false;
  return true;
}

bool euler_splitting_check(std::size_t n, int cap) {
  const auto dn = generic_dn(n, cap);
  std::vector<FreeModuleVector> gens{dn.chi};
  for (const auto& e : dn.etas) gens.push_back(e.field);
  return no_syzygy_involves_first(gens);
}

QuinticExample quintic_example() {
  const std::size_t n = 3;
  QuinticExample ex;
  ex.arrangement = make_arrangement({parse_polynomial("x", n), parse_polynomial("y", n), parse_polynomial("z", n),
                                     parse_polynomial("x+y+z", n), parse_polynomial("x+2*y+3*z", n)});
  ex.q = parse_operator("(x+y+z)*(x+2*y+3*z)*(3*z*y^2*dy^2 + (x+4*y-3*z)*y*z*dy*dz - 4*y*z^2*dz^2)", n);
  ex.q_corrected = parse_operator("(x+y+z)*(x+2*y+3*z)*(3*z*y^2*dy^2 - (x+4*y-3*z)*y*z*dy*dz - 4*y*z^2*dz^2)", n);
  return ex;
}

}  // namespace logdiv
