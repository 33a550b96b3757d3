#include "logdiv/vfilt.hpp"

#include <algorithm>
#include <stdexcept>

#include "logdiv/groebner.hpp"
#include "logdiv/linalg.hpp"
#include "logdiv/logder.hpp"

namespace logdiv {

namespace {

void require_divisor(const Polynomial& f) {
  if (f.is_zero() || f.is_constant()) throw std::invalid_argument("divisor must be a nonconstant polynomial");
}

QuasiHomogeneity require_graded(const Polynomial& f) {
  require_divisor(f);
  auto q = quasi_homogeneity(f);
  if (!q) throw std::invalid_argument("graded operator spaces need a quasi-homogeneous divisor");
  return *q;
}

// x^a with |a| <= bound, all degrees.
std::vector<Monomial> monomials_up_to(std::size_t n, int bound) {
  std::vector<Monomial> out;
  for (int t = 0; t <= bound; ++t)
    for (auto& m : monomials_of_degree(n, t)) out.push_back(std::move(m));
  return out;
}

std::vector<Monomial> monomials_of_weight(std::size_t n, std::span<const int> weights, int target) {
  std::vector<Monomial> out;
  if (target < 0) return out;
  const int min_w = *std::min_element(weights.begin(), weights.end());
  for (int t = target / min_w; t >= 0; --t)
    for (auto& m : monomials_of_degree(n, t))
      if (m.weighted_degree(weights) == target) out.push_back(std::move(m));
  return out;
}

// A membership condition P(x^a f^l) in O f^e with e >= 1.
struct Condition {
  Polynomial test;  // x^a f^l
  Polynomial modulus;  // f^e
};

std::vector<Condition> conditions(const Polynomial& f, int k, int d) {
  const std::size_t n = f.ring_dim();
  std::vector<Condition> out;
  for (int l = 0; l <= d; ++l) {
    const int e = l - k;
    if (e <= 0) continue;
    const Polynomial fl = f.pow(static_cast<unsigned>(l));
    const Polynomial fe = f.pow(static_cast<unsigned>(e));
    for (const auto& a : monomials_up_to(n, d - l)) out.push_back({fl.mul_term(a, 1), fe});
  }
  return out;
}

GradedOperatorSpace space_from_rows(Matrix rows, const OperatorCoordinates& coords, const Polynomial& f, int d, int w,
                                    std::vector<int> weights) {
  rref(rows);
  GradedOperatorSpace s;
  s.f = f;
  s.order_bound = d;
  s.weight = w;
  s.weights = std::move(weights);
  for (std::size_t r = 0; r < rows.rows(); ++r) s.basis.push_back(coords.op(rows.row(r), f.ring_dim()));
  return s;
}

// Operators R of weight w, order <= d with R(x^a f^l) in O f^(l-k) for |a| + l <= d.
GradedOperatorSpace solve_graded(const Polynomial& f, const QuasiHomogeneity& q, int k, int d, int w) {
  const std::size_t n = f.ring_dim();
  const OperatorCoordinates coords = operator_coordinates(n, q.weights, d, w);
  const auto conds = conditions(f, k, d);

  std::map<Monomial, std::size_t, DescendingMonomial> row_of;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> columns(coords.size());
  for (std::size_t ci = 0; ci < conds.size(); ++ci) {
    // Derivatives d^b (x^a f^l) are shared by all unknowns with the same b.
    std::map<Monomial, Polynomial, DescendingMonomial> derived;
    for (std::size_t j = 0; j < coords.size(); ++j) {
      const auto& [b, a] = coords.terms[j];
      auto it = derived.find(b);
      if (it == derived.end()) {
        Polynomial g = conds[ci].test;
        for (std::size_t i = 0; i < n; ++i)
          for (unsigned e = 0; e < b[i]; ++e) g = g.derivative(i);
        it = derived.emplace(b, std::move(g)).first;
      }
      const Polynomial r = remainder(it->second.mul_term(a, 1), conds[ci].modulus);
      for (const auto& t : r.terms()) {
        Monomial key(n + 1);
        for (std::size_t i = 0; i < n; ++i) key.set(i, t.mono[i]);
        key.set(n, static_cast<unsigned>(ci));
        auto [rit, _] = row_of.try_emplace(key, row_of.size());
        columns[j].emplace_back(rit->second, t.coef);
      }
    }
  }
  Matrix a(row_of.size(), coords.size());
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (const auto& [r, c] : columns[j]) a(r, j) += c;
  return space_from_rows(kernel(a), coords, f, d, w, q.weights);
}

Matrix rows_of(const GradedOperatorSpace& s, const OperatorCoordinates& coords) {
  Matrix m(0, coords.size());
  for (const auto& op : s.basis) m.append_row(coords.coordinates(op));
  return m;
}

}  // namespace

bool OperatorCoordinates::Less::operator()(const std::pair<Monomial, Monomial>& a,
                                           const std::pair<Monomial, Monomial>& b) const {
  if (int c = compare_degrevlex(a.first, b.first)) return c > 0;
  return compare_degrevlex(a.second, b.second) > 0;
}

std::optional<std::size_t> OperatorCoordinates::index(const Monomial& d_exponent, const Monomial& x_exponent) const {
  auto it = lookup.find({d_exponent, x_exponent});
  if (it == lookup.end()) return std::nullopt;
  return it->second;
}

std::vector<Rational> OperatorCoordinates::coordinates(const WeylOperator& op) const {
  std::vector<Rational> v(size());
  for (const auto& [b, p] : op.terms())
    for (const auto& t : p.terms()) {
      auto i = index(b, t.mono);
      if (!i) throw std::invalid_argument("operator has a term outside the coordinate range: " + op.to_string());
      v[*i] = t.coef;
    }
  return v;
}

WeylOperator OperatorCoordinates::op(std::span<const Rational> coords, std::size_t n) const {
  WeylOperator out(n);
  for (std::size_t j = 0; j < coords.size(); ++j)
    if (sgn(coords[j]) != 0) out += WeylOperator::term(Polynomial::monomial(terms[j].second, coords[j]), terms[j].first);
  return out;
}

OperatorCoordinates operator_coordinates(std::size_t n, std::span<const int> weights, int d, int w) {
  std::vector<int> wts(weights.begin(), weights.end());
  if (wts.empty()) wts.assign(n, 1);
  OperatorCoordinates c;
  for (int r = d; r >= 0; --r)
    for (const auto& b : monomials_of_degree(n, r))
      for (auto& a : monomials_of_weight(n, wts, w + b.weighted_degree(wts))) {
        c.lookup.emplace(std::pair{b, a}, c.terms.size());
        c.terms.emplace_back(b, std::move(a));
      }
  return c;
}

bool v_membership(const Polynomial& f, const WeylOperator& p, int k, MembershipMode mode) {
  require_divisor(f);
  if (p.ring_dim() != f.ring_dim()) throw dimension_error("v_membership: operator and divisor rings differ");
  if (p.is_zero()) return true;
  if (mode == MembershipMode::Auto)
    mode = quasi_homogeneity(f) ? MembershipMode::Global : MembershipMode::LocalAtOrigin;
  for (const auto& c : conditions(f, k, p.order())) {
    const Polynomial g = apply(p, c.test);
    if (g.is_zero()) continue;
    const bool ok = mode == MembershipMode::Global
                        ? divide_exact(g, c.modulus).has_value()
                        : local_membership_at_origin(g, ideal_basis(std::vector<Polynomial>{c.modulus}));
    if (!ok) return false;
  }
  return true;
}

GradedOperatorSpace v0_graded_basis(const Polynomial& f, int d, int w) {
  if (d < 0) throw std::invalid_argument("order bound must be nonnegative");
  const auto q = require_graded(f);
  return solve_graded(f, q, 0, d, w);
}

GradedOperatorSpace logder_generated_graded(const Polynomial& f, int d, int w) {
  if (d < 0) throw std::invalid_argument("order bound must be nonnegative");
  const auto q = require_graded(f);
  const std::size_t n = f.ring_dim();
  const OperatorCoordinates coords = operator_coordinates(n, q.weights, d, w);
  const DerivationModule der = log_derivations(f, true);
  const auto fields = der.operators();
  const auto field_weights = der.generator_grading()->shifts;

  Matrix rows(0, coords.size());
  // Nondecreasing index sequences suffice: reordering costs brackets, which lie in Der(log f).
  std::vector<std::size_t> seq;
  auto emit = [&](const WeylOperator& prod, int weight) {
    for (const auto& g : monomials_of_weight(n, q.weights, w - weight))
      rows.append_row(coords.coordinates(Polynomial::monomial(g) * prod));
  };
  auto extend = [&](auto&& self, const WeylOperator& prod, int weight, std::size_t start, int depth) -> void {
    emit(prod, weight);
    if (depth == d) return;
    for (std::size_t i = start; i < fields.size(); ++i)
      self(self, prod * fields[i], weight + field_weights[i], i, depth + 1);
  };
  extend(extend, WeylOperator::multiplication(Polynomial::constant(n, 1)), 0, 0, 0);
  return space_from_rows(std::move(rows), coords, f, d, w, q.weights);
}

V0Comparison compare_v0(const Polynomial& f, int d, int w) {
  const auto v0 = v0_graded_basis(f, d, w);
  const auto gen = logder_generated_graded(f, d, w);
  const auto coords = operator_coordinates(f.ring_dim(), v0.weights, d, w);
  V0Comparison out;
  out.v0_dimension = v0.dimension();
  out.generated_dimension = gen.dimension();
  out.equal = out.v0_dimension == out.generated_dimension;
  if (out.equal) return out;
  Matrix g = rows_of(gen, coords);
  const auto pivots = rref(g);
  for (const auto& op : v0.basis) {
    auto v = coords.coordinates(op);
    reduce_against(v, g, pivots);
    auto lead = std::find_if(v.begin(), v.end(), [](const Rational& c) { return sgn(c) != 0; });
    if (lead == v.end()) continue;
    const Rational inv = 1 / *lead;
    for (auto& c : v) c *= inv;
    out.witness = coords.op(v, f.ring_dim());
    break;
  }
  return out;
}

GradedOperatorSpace vk_graded_basis(const Polynomial& f, int k, int d, int w) {
  if (d < 0) throw std::invalid_argument("order bound must be nonnegative");
  const auto q = require_graded(f);
  if (k >= 1) return solve_graded(f, q, k, d, w);
  const unsigned e = static_cast<unsigned>(-k);
  const Polynomial fe = f.pow(e);
  const auto v0 = solve_graded(f, q, 0, d, w - static_cast<int>(e) * q.degree);
  const auto coords = operator_coordinates(f.ring_dim(), q.weights, d, w);
  Matrix rows(0, coords.size());
  for (const auto& op : v0.basis) rows.append_row(coords.coordinates(fe * op));
  return space_from_rows(std::move(rows), coords, f, d, w, q.weights);
}

}  // namespace logdiv
