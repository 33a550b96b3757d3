#include "logdiv/logder.hpp"

#include <algorithm>
#include <stdexcept>

#include "logdiv/linalg.hpp"

namespace logdiv {

std::optional<QuasiHomogeneity> quasi_homogeneity(const Polynomial& f) {
  if (f.is_constant()) return std::nullopt;
  auto w = quasi_homogeneous_weights(f);
  if (!w) return std::nullopt;
  auto d = f.homogeneous_degree(*w);
  if (!d) return std::nullopt;
  return QuasiHomogeneity{*w, *d};
}

Grading vector_field_grading(const QuasiHomogeneity& q) {
  Grading g{q.weights, {}};
  for (int w : q.weights) g.shifts.push_back(-w);
  return g;
}

std::vector<WeylOperator> DerivationModule::operators() const {
  std::vector<WeylOperator> out;
  for (const auto& g : generators) out.push_back(WeylOperator::vector_field(g));
  return out;
}

std::optional<Grading> DerivationModule::generator_grading() const {
  if (!grading) return std::nullopt;
  const Grading vf = vector_field_grading(*grading);
  Grading g{grading->weights, {}};
  for (const auto& v : generators) {
    auto d = homogeneous_degree(v, vf);
    if (!d) return std::nullopt;
    g.shifts.push_back(*d);
  }
  return g;
}

std::optional<Polynomial> log_cofactor(const Polynomial& f, const FreeModuleVector& theta) {
  if (theta.rank() != f.ring_dim()) throw dimension_error("log_cofactor: need one coefficient per variable");
  Polynomial tf(f.ring_dim());
  for (std::size_t i = 0; i < theta.rank(); ++i)
    if (!theta[i].is_zero()) tf += theta[i] * f.derivative(i);
  return divide_exact(tf, f);
}

FreeModuleVector field_coefficients(const WeylOperator& op) {
  auto v = op.as_vector_field();
  if (!v) throw std::invalid_argument("operator is not a vector field");
  return *v;
}

namespace {

void check_divisor(const Polynomial& f) {
  if (f.is_constant()) throw std::invalid_argument("divisor must be a nonconstant polynomial");
}

std::vector<FreeModuleVector> generator_syzygies(const std::vector<FreeModuleVector>& gens,
                                                 const std::optional<Grading>& g) {
  if (gens.empty()) return {};
  if (!g) return syzygies(gens);
  auto syz = syzygies(gens, *g);
  if (auto m = minimalize(syz, *g)) return *m;
  return syz;
}

DerivationModule finish(DerivationModule dm) {
  dm.cofactors.clear();
  for (const auto& v : dm.generators) {
    auto c = log_cofactor(dm.f, v);
    if (!c) throw std::invalid_argument("generator is not logarithmic");
    dm.cofactors.push_back(*c);
  }
  dm.first_syzygies = generator_syzygies(dm.generators, dm.generator_grading());
  return dm;
}

// Syzygies of (d_1 f, ..., d_n f[, -f]) projected onto the first n coordinates.
std::vector<FreeModuleVector> derivative_syzygies(const Polynomial& f, bool with_f,
                                                  const std::optional<QuasiHomogeneity>& q) {
  const std::size_t n = f.ring_dim();
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(f.derivative(i));
  if (with_f) gens.push_back(-f);
  Grading g;
  if (q) {
    g.weights = q->weights;
    for (std::size_t i = 0; i < n; ++i) g.shifts.push_back(q->degree - q->weights[i]);
    if (with_f) g.shifts.push_back(q->degree);
  }
  // Zero partials (variables absent from f) are fine: their unit vectors are syzygies.
  std::vector<FreeModuleVector> out;
  for (const auto& s : syzygies(gens, g)) {
    std::vector<Polynomial> comps(s.components().begin(), s.components().begin() + static_cast<std::ptrdiff_t>(n));
    FreeModuleVector v(std::move(comps));
    if (!v.is_zero()) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

DerivationModule derivation_module(const Polynomial& f, std::vector<FreeModuleVector> generators) {
  check_divisor(f);
  DerivationModule dm;
  dm.f = f;
  dm.grading = quasi_homogeneity(f);
  dm.generators = std::move(generators);
  return finish(std::move(dm));
}

DerivationModule minimalize_generators(const DerivationModule& dm) {
  if (!dm.grading) return dm;
  auto m = minimalize(dm.generators, vector_field_grading(*dm.grading));
  if (!m) return dm;
  DerivationModule out = dm;
  out.generators = std::move(*m);
  return finish(std::move(out));
}

DerivationModule log_derivations(const Polynomial& f, bool minimal) {
  check_divisor(f);
  DerivationModule dm;
  dm.f = f;
  dm.grading = quasi_homogeneity(f);
  dm.generators = derivative_syzygies(f, true, dm.grading);
  if (minimal && dm.grading) {
    if (auto m = minimalize(dm.generators, vector_field_grading(*dm.grading))) dm.generators = std::move(*m);
  }
  return finish(std::move(dm));
}

DerivationModule ann_theta(const Polynomial& f, bool minimal) {
  check_divisor(f);
  DerivationModule dm;
  dm.f = f;
  dm.grading = quasi_homogeneity(f);
  dm.generators = derivative_syzygies(f, false, dm.grading);
  if (minimal && dm.grading) {
    if (auto m = minimalize(dm.generators, vector_field_grading(*dm.grading))) dm.generators = std::move(*m);
  }
  return finish(std::move(dm));
}

EulerField euler_field(const Polynomial& f) {
  check_divisor(f);
  const std::size_t n = f.ring_dim();
  if (auto q = quasi_homogeneity(f)) {
    FreeModuleVector chi(n, n);
    for (std::size_t i = 0; i < n; ++i)
      chi[i] = Polynomial::variable(n, i) * fraction(q->weights[i], q->degree);
    return {EulerStatus::Found, chi};
  }
  std::vector<FreeModuleVector> grads;
  std::vector<Polynomial> partials;
  for (std::size_t i = 0; i < n; ++i) {
    partials.push_back(f.derivative(i));
    grads.emplace_back(std::vector<Polynomial>{partials.back()});
  }
  if (auto c = lift(FreeModuleVector(std::vector<Polynomial>{f}), grads)) {
    return {EulerStatus::Found, FreeModuleVector(std::move(*c))};
  }
  if (local_membership_at_origin(f, ideal_basis(partials))) return {EulerStatus::LocalOnly, std::nullopt};
  return {EulerStatus::NotEulerHomogeneous, std::nullopt};
}

namespace {

std::vector<std::vector<Polynomial>> coefficient_matrix(std::span<const FreeModuleVector> fields) {
  std::vector<std::vector<Polynomial>> m;
  for (const auto& v : fields) m.push_back(v.components());
  return m;
}

// Subsets of size k of {0..n-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

DeterminantCheck polynomiality_det(std::span<const FreeModuleVector> fields) {
  if (fields.empty()) throw std::invalid_argument("polynomiality_det: no fields");
  const std::size_t n = fields[0].ring_dim();
  if (fields.size() != n) throw std::invalid_argument("polynomiality_det: need exactly n vector fields");
  for (const auto& v : fields)
    if (v.rank() != n) throw dimension_error("polynomiality_det: field rank mismatch");
  Polynomial det = determinant(coefficient_matrix(fields));
  return {!det.is_zero(), det};
}

FreenessVerdict saito_freeness_test(const DerivationModule& dm) {
  const std::size_t n = dm.ring_dim();
  FreenessVerdict out;
  out.determinant = Polynomial(n);
  if (dm.grading) {
    auto m = minimalize(dm.generators, vector_field_grading(*dm.grading));
    if (!m) return out;
    out.minimal_generators = m->size();
    if (m->size() > n) {
      out.verdict = Freeness::NotFreeAtOrigin;
      return out;
    }
    if (m->size() == n) {
      Polynomial det = determinant(coefficient_matrix(*m));
      auto q = det.is_zero() ? std::nullopt : divide_exact(det, dm.f);
      if (q && q->is_constant()) {
        out.verdict = Freeness::FreeWithBasis;
        out.basis = std::move(*m);
        out.determinant = std::move(det);
      }
    }
    return out;
  }
  // Without a grading: look for n generators whose determinant is a unit at 0 times f.
  const std::size_t k = dm.generators.size();
  out.minimal_generators = k;
  if (k < n || k > 12) return out;
  std::vector<std::size_t> pick(n);
  for (std::size_t i = 0; i < n; ++i) pick[i] = i;
  do {
    std::vector<FreeModuleVector> sel;
    for (auto i : pick) sel.push_back(dm.generators[i]);
    Polynomial det = determinant(coefficient_matrix(sel));
    if (det.is_zero()) continue;
    auto q = divide_exact(det, dm.f);
    if (q && sgn(q->evaluate_at_origin()) != 0) {
      out.verdict = Freeness::FreeWithBasis;
      out.basis = std::move(sel);
      out.determinant = std::move(det);
      return out;
    }
  } while (next_combination(pick, k));
  return out;
}

bool split_check(const DerivationModule& dm, const FreeModuleVector& chi, std::span<const FreeModuleVector> a) {
  if (!log_cofactor(dm.f, chi)) throw std::invalid_argument("split_check: chi is not logarithmic");
  if (chi.is_zero()) return false;
  for (const auto& v : a)
    if (!log_cofactor(dm.f, v)) return false;
  std::vector<FreeModuleVector> all{chi};
  all.insert(all.end(), a.begin(), a.end());
  if (!same_module(all, dm.generators)) return false;
  std::optional<Grading> g;
  if (dm.grading) {
    const Grading vf = vector_field_grading(*dm.grading);
    Grading gg{dm.grading->weights, {}};
    for (const auto& v : all) {
      auto d = homogeneous_degree(v, vf);
      if (!d) break;
      gg.shifts.push_back(*d);
    }
    if (gg.shifts.size() == all.size()) g = gg;
  }
  const auto syz = g ? syzygies(all, *g) : syzygies(all);
  return std::all_of(syz.begin(), syz.end(), [](const FreeModuleVector& s) { return s[0].is_zero(); });
}

namespace {

bool proportional(const FreeModuleVector& a, const FreeModuleVector& b) {
  // a and b proportional over Q: a * lc(b) = b * lc(a) at the first nonzero component.
  for (std::size_t i = 0; i < a.rank(); ++i) {
    if (a[i].is_zero() != b[i].is_zero()) return false;
    if (a[i].is_zero()) continue;
    const Rational ca = a[i].leading().coef, cb = b[i].leading().coef;
    return Polynomial::constant(a.ring_dim(), cb) * a == Polynomial::constant(a.ring_dim(), ca) * b;
  }
  return true;
}

}  // namespace

bool split_check(const DerivationModule& dm, const FreeModuleVector& chi) {
  std::vector<FreeModuleVector> a;
  for (const auto& v : dm.generators)
    if (!proportional(v, chi)) a.push_back(v);
  return split_check(dm, chi, a);
}

bool verify_logarithmic(const DerivationModule& dm) {
  if (dm.cofactors.size() != dm.generators.size()) return false;
  for (std::size_t i = 0; i < dm.generators.size(); ++i) {
    const auto& v = dm.generators[i];
    Polynomial tf(dm.ring_dim());
    for (std::size_t j = 0; j < v.rank(); ++j) tf += v[j] * dm.f.derivative(j);
    if (!(tf == dm.cofactors[i] * dm.f)) return false;
  }
  return true;
}

bool verify_bracket_closure(const DerivationModule& dm) {
  const auto ops = dm.operators();
  const auto gb = buchberger(dm.generators, TermOrder{}, dm.ring_dim(), dm.ring_dim());
  for (std::size_t i = 0; i < ops.size(); ++i)
    for (std::size_t j = i + 1; j < ops.size(); ++j) {
      const auto br = commutator(ops[i], ops[j]);
      if (br.is_zero()) continue;
      auto v = br.as_vector_field();
      if (!v || !contains(gb, *v)) return false;
    }
  return true;
}

}  // namespace logdiv
