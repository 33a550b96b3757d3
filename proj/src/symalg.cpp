#include "logdiv/symalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "logdiv/linalg.hpp"

namespace logdiv {

namespace {

std::vector<std::size_t> identity_map(std::size_t n, std::size_t offset = 0) {
  std::vector<std::size_t> m(n);
  std::iota(m.begin(), m.end(), offset);
  return m;
}

// Positive offset c with xi_i of weight c - w_i and T_j of weight d_j + c.
int symbol_offset(const std::vector<int>& x_weights, const std::vector<int>& gen_weights) {
  int c = 1;
  for (int w : x_weights) c = std::max(c, w + 1);
  for (int d : gen_weights) c = std::max(c, 1 - d);
  return c;
}

std::size_t index_of(const std::vector<Monomial>& ms, const Monomial& m) {
  for (std::size_t i = 0; i < ms.size(); ++i)
    if (ms[i] == m) return i;
  throw std::logic_error("monomial not found");
}

Monomial unit_monomial(std::size_t n, std::size_t j) {
  Monomial m(n);
  m.set(j, 1);
  return m;
}

}  // namespace

std::vector<std::string> SymPresentation::variable_names() const {
  auto names = default_variable_names(base_dim);
  for (std::size_t j = 0; j < module_rank; ++j) names.push_back("T" + std::to_string(j + 1));
  return names;
}

SymPresentation sym_presentation(const DerivationModule& dm) {
  SymPresentation sp;
  sp.base_dim = dm.ring_dim();
  sp.module_rank = dm.generators.size();
  sp.generators = dm.generators;
  sp.syzygies = dm.first_syzygies;
  const std::size_t n = sp.base_dim, N = sp.ring_dim();
  if (auto g = dm.generator_grading()) {
    sp.generator_weights = g->shifts;
    const int c = symbol_offset(dm.grading->weights, sp.generator_weights);
    sp.weights = dm.grading->weights;
    for (int d : sp.generator_weights) sp.weights.push_back(d + c);
  }
  const auto embed = identity_map(n);
  for (const auto& s : sp.syzygies) {
    Polynomial r(N);
    for (std::size_t j = 0; j < sp.module_rank; ++j)
      if (!s[j].is_zero()) r += s[j].remap(N, embed) * Polynomial::variable(N, n + j);
    if (!r.is_zero()) sp.relations.push_back(std::move(r));
  }
  return sp;
}

ReesKernel rees_kernel(const DerivationModule& dm) {
  const SymPresentation sp = sym_presentation(dm);
  const std::size_t n = sp.base_dim, m = sp.module_rank, N = 2 * n + m;
  ReesKernel rk;
  const TermOrder target = TermOrder::degrevlex(sp.weights);
  if (m == 0) {
    rk.basis = buchberger({}, target, 1, sp.ring_dim());
    return rk;
  }
  // Ring: xi_1..xi_n, x_1..x_n, T_1..T_m.
  std::vector<int> w;
  if (!sp.weights.empty()) {
    const int c = symbol_offset(dm.grading->weights, sp.generator_weights);
    for (std::size_t i = 0; i < n; ++i) w.push_back(c - sp.weights[i]);
    w.insert(w.end(), sp.weights.begin(), sp.weights.end());
  }
  const auto x_embed = identity_map(n, n);
  std::vector<Polynomial> gens;
  for (std::size_t j = 0; j < m; ++j) {
    Polynomial g = Polynomial::variable(N, 2 * n + j);
    for (std::size_t i = 0; i < n; ++i)
      if (!sp.generators[j][i].is_zero()) g -= sp.generators[j][i].remap(N, x_embed) * Polynomial::variable(N, i);
    gens.push_back(std::move(g));
  }
  const auto xi = identity_map(n);
  const GroebnerBasis elim = eliminate(gens, xi, TermOrder::degrevlex(w));
  std::vector<std::size_t> back(N, 0);
  for (std::size_t i = n; i < N; ++i) back[i] = i - n;
  for (const auto& p : elim.polynomials()) rk.relations.push_back(p.remap(sp.ring_dim(), back));
  rk.basis = ideal_basis(rk.relations, target);
  if (rk.relations.empty()) rk.basis = buchberger({}, target, 1, sp.ring_dim());
  return rk;
}

namespace {

// A nonzero maximal minor of the m x n generator matrix, chosen at sample points.
Polynomial nonzero_maximal_minor(const SymPresentation& sp) {
  const std::size_t n = sp.base_dim, m = sp.module_rank;
  std::size_t best_rank = 0;
  std::vector<std::size_t> rows, cols;
  for (int attempt = 0; attempt < 4; ++attempt) {
    std::vector<Rational> pt(n);
    for (std::size_t i = 0; i < n; ++i) pt[i] = Rational(static_cast<long>((i + 2) * (i + 3 + attempt) + attempt * 7 + 1));
    Matrix a(m, n);
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t i = 0; i < n; ++i) a(j, i) = sp.generators[j][i].evaluate(pt);
    Matrix at(n, m);
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t i = 0; i < n; ++i) at(i, j) = a(j, i);
    Matrix ra = a, rat = at;
    const auto pc = rref(ra);   // pivot columns = coordinates
    const auto pr = rref(rat);  // pivot columns of transpose = generators
    if (pc.size() > best_rank) {
      best_rank = pc.size();
      cols = pc;
      rows = pr;
    }
  }
  if (best_rank == 0) return Polynomial::constant(sp.ring_dim(), 1);
  std::vector<std::vector<Polynomial>> sub;
  for (auto r : rows) {
    std::vector<Polynomial> row;
    for (auto c : cols) row.push_back(sp.generators[r][c]);
    sub.push_back(std::move(row));
  }
  return determinant(std::move(sub));
}

}  // namespace

ReesKernel rees_kernel_by_saturation(const SymPresentation& sp) {
  const std::size_t N = sp.ring_dim();
  const TermOrder target = TermOrder::degrevlex(sp.weights);
  ReesKernel rk;
  if (sp.relations.empty()) {
    rk.basis = buchberger({}, target, 1, N);
    return rk;
  }
  const Polynomial delta = nonzero_maximal_minor(sp).remap(N, identity_map(sp.base_dim));
  rk.basis = saturation(ideal_basis(sp.relations, target), delta);
  rk.relations = rk.basis.polynomials();
  return rk;
}

bool pi_injectivity_test(const SymPresentation& sp, const ReesKernel& rk) {
  if (rk.relations.empty()) return true;
  if (sp.relations.empty()) return false;
  const GroebnerBasis j = ideal_basis(sp.relations, TermOrder::degrevlex(sp.weights));
  return std::all_of(rk.relations.begin(), rk.relations.end(), [&](const Polynomial& q) { return contains(j, q); });
}

SymPiece sym_piece(const SymPresentation& sp, int k) {
  if (k < 1) throw std::invalid_argument("sym_piece: degree must be positive");
  const std::size_t n = sp.base_dim, m = sp.module_rank;
  SymPiece piece;
  piece.t_monomials = monomials_of_degree(m, k);
  const std::size_t r = piece.t_monomials.size();
  if (!sp.weights.empty()) {
    piece.grading.weights.assign(sp.weights.begin(), sp.weights.begin() + static_cast<std::ptrdiff_t>(n));
    for (const auto& t : piece.t_monomials) piece.grading.shifts.push_back(t.weighted_degree(sp.generator_weights));
  }
  const auto lower = monomials_of_degree(m, k - 1);
  for (const auto& s : sp.syzygies) {
    for (const auto& mu : lower) {
      FreeModuleVector v(r, n);
      for (std::size_t j = 0; j < m; ++j)
        if (!s[j].is_zero()) v[index_of(piece.t_monomials, mu * unit_monomial(m, j))] += s[j];
      if (!v.is_zero()) piece.relations.push_back(std::move(v));
    }
  }
  return piece;
}

namespace {

TermOrder piece_order(const SymPiece& piece) {
  TermOrder o = TermOrder::degrevlex(piece.grading.weights);
  o.shifts = piece.grading.shifts;
  return o;
}

FreeModuleVector monic_vector(const FreeModuleVector& v, const TermOrder& order) {
  const Term* lead = nullptr;
  std::size_t lead_c = 0;
  for (std::size_t c = 0; c < v.rank(); ++c)
    for (const auto& t : v[c].terms())
      if (!lead || order.compare(t.mono, c, lead->mono, lead_c) > 0) {
        lead = &t;
        lead_c = c;
      }
  if (!lead) return v;
  return Polynomial::constant(v.ring_dim(), 1 / lead->coef) * v;
}

Polynomial piece_element(const SymPresentation& sp, const SymPiece& piece, const FreeModuleVector& v) {
  const std::size_t n = sp.base_dim, N = sp.ring_dim();
  const auto embed = identity_map(n);
  Polynomial out(N);
  for (std::size_t c = 0; c < v.rank(); ++c) {
    if (v[c].is_zero()) continue;
    Monomial t(N);
    for (std::size_t j = 0; j < sp.module_rank; ++j) t.set(n + j, piece.t_monomials[c][j]);
    out += v[c].remap(N, embed).mul_term(t, 1);
  }
  return out;
}

}  // namespace

TorsionResult torsion_test_symk(const SymPresentation& sp, int k) {
  const SymPiece piece = sym_piece(sp, k);
  const std::size_t n = sp.base_dim, r = piece.t_monomials.size();
  TorsionResult out;
  if (piece.relations.empty() || r == 0) return out;
  const TermOrder order = piece_order(piece);
  const GroebnerBasis gb = buchberger(piece.relations, order, r, n);
  for (std::size_t i = 0; i < n; ++i) {
    const GroebnerBasis q = module_quotient(piece.relations, Polynomial::variable(n, i), order, r);
    std::optional<FreeModuleVector> best;
    for (const auto& g : q.generators()) {
      FreeModuleVector nf = normal_form(g, gb);
      if (nf.is_zero()) continue;
      nf = monic_vector(nf, order);
      if (!best || compare_vectors(nf, *best, order) < 0) best = std::move(nf);
    }
    if (best) out.witnesses.push_back({i, piece_element(sp, piece, *best), *best});
  }
  out.torsion_free = out.witnesses.empty();
  return out;
}

GradeCertificate grade_criterion(const DerivationModule& a, int dim_z) {
  GradeCertificate cert;
  cert.required = dim_z + 3;
  const DerivationModule am = minimalize_generators(a);
  if (am.first_syzygies.size() != 1 || am.first_syzygies[0].is_zero()) return cert;
  cert.shape_ok = true;
  cert.syzygy = am.first_syzygies[0];
  std::vector<Polynomial> entries;
  for (const auto& e : cert.syzygy->components())
    if (!e.is_zero()) entries.push_back(e);
  std::vector<int> w;
  if (am.grading) w = am.grading->weights;
  cert.grade = codim(ideal_basis(entries, TermOrder::degrevlex(w)));
  cert.certified = cert.grade >= cert.required;
  return cert;
}

std::optional<int> depth_via_resolution(std::size_t rank, std::vector<FreeModuleVector> relations,
                                        const Grading& grading, std::size_t ring_dim) {
  std::vector<int> shifts = grading.shifts;
  if (shifts.empty()) shifts.assign(rank, 0);
  for (const auto& r : relations)
    if (!r.is_zero() && !homogeneous_degree(r, Grading{grading.weights, shifts}))
      throw std::invalid_argument("depth_via_resolution: relations are not graded");
  std::erase_if(relations, [](const FreeModuleVector& v) { return v.is_zero(); });

  // Remove generators that a relation expresses through the others.
  for (bool pruned = true; pruned;) {
    pruned = false;
    for (std::size_t ri = 0; ri < relations.size() && !pruned; ++ri) {
      for (std::size_t c = 0; c < rank && !pruned; ++c) {
        const Polynomial& e = relations[ri][c];
        if (e.is_zero() || !e.is_constant()) continue;
        const FreeModuleVector piv = relations[ri];
        const Rational inv = 1 / e.evaluate_at_origin();
        std::vector<FreeModuleVector> next;
        for (std::size_t s = 0; s < relations.size(); ++s) {
          if (s == ri) continue;
          FreeModuleVector v = relations[s];
          if (!v[c].is_zero()) v -= (v[c] * inv) * piv;
          std::vector<Polynomial> comps;
          for (std::size_t cc = 0; cc < rank; ++cc)
            if (cc != c) comps.push_back(v[cc]);
          FreeModuleVector w = comps.empty() ? FreeModuleVector(0, ring_dim) : FreeModuleVector(std::move(comps));
          if (!w.is_zero()) next.push_back(std::move(w));
        }
        relations = std::move(next);
        shifts.erase(shifts.begin() + static_cast<std::ptrdiff_t>(c));
        --rank;
        pruned = true;
      }
    }
  }
  if (rank == 0) return std::nullopt;
  const int n = static_cast<int>(ring_dim);
  if (relations.empty()) return n;
  Grading g{grading.weights, shifts};
  auto cur = minimalize(relations, g);
  if (!cur) throw std::invalid_argument("depth_via_resolution: relations are not graded");
  int pd = 0;
  while (!cur->empty()) {
    ++pd;
    Grading next{grading.weights, {}};
    for (const auto& v : *cur) next.shifts.push_back(*homogeneous_degree(v, g));
    auto syz = syzygies(*cur, next);
    g = next;
    cur = minimalize(syz, g);
  }
  return n - pd;
}

std::optional<int> depth_via_resolution(const SymPiece& piece, std::size_t ring_dim) {
  if (piece.grading.shifts.empty() && !piece.t_monomials.empty()) {
    for (const auto& r : piece.relations)
      if (!homogeneous_degree(r, Grading{}))
        throw std::invalid_argument("depth_via_resolution: ungraded module");
  }
  return depth_via_resolution(piece.t_monomials.size(), piece.relations, piece.grading, ring_dim);
}

FreeModuleVector symbol_residue(const DerivationModule& dm, const Polynomial& symbol, int k) {
  const std::size_t n = dm.ring_dim();
  if (symbol.ring_dim() != 2 * n) throw dimension_error("symbol_residue: symbol must live in 2n variables");
  const auto xi_monos = monomials_of_degree(n, k);
  const std::size_t r = xi_monos.size();
  auto to_vector = [&](const Polynomial& p) {
    std::vector<std::vector<Term>> buckets(r);
    for (const auto& t : p.terms()) {
      Monomial x(n), xi(n);
      for (std::size_t i = 0; i < n; ++i) {
        x.set(i, t.mono[i]);
        xi.set(i, t.mono[n + i]);
      }
      if (xi.degree() != k) throw std::invalid_argument("symbol_residue: symbol is not of the given order");
      buckets[index_of(xi_monos, xi)].push_back({x, t.coef});
    }
    std::vector<Polynomial> comps;
    for (auto& b : buckets) comps.push_back(Polynomial::from_terms(n, std::move(b)));
    return FreeModuleVector(std::move(comps));
  };

  const auto ops = dm.operators();
  std::vector<Polynomial> symbols;
  for (const auto& op : ops)
    if (!op.is_zero()) symbols.push_back(logdiv::symbol(op));
  // All k-element multisets of generator symbols.
  std::vector<FreeModuleVector> products;
  std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
  const std::size_t m = symbols.size();
  if (m > 0) {
    for (;;) {
      Polynomial prod = Polynomial::constant(2 * n, 1);
      for (auto i : idx) prod *= symbols[i];
      products.push_back(to_vector(prod));
      std::size_t pos = idx.size();
      while (pos > 0 && idx[pos - 1] == m - 1) --pos;
      if (pos == 0) break;
      const std::size_t v = idx[pos - 1] + 1;
      for (std::size_t q = pos - 1; q < idx.size(); ++q) idx[q] = v;
    }
  }
  TermOrder order;
  if (dm.grading) {
    order.weights = dm.grading->weights;
    for (const auto& b : xi_monos) order.shifts.push_back(-b.weighted_degree(dm.grading->weights));
  }
  const GroebnerBasis gb = buchberger(products, order, r, n);
  return normal_form(to_vector(symbol), gb);
}

std::vector<FreeModuleVector> complement_of_euler(const DerivationModule& der, const FreeModuleVector& chi) {
  std::vector<FreeModuleVector> all{chi};
  all.insert(all.end(), der.generators.begin(), der.generators.end());
  if (der.grading) {
    if (auto m = minimalize(all, vector_field_grading(*der.grading))) {
      if (!m->empty() && m->front() == chi) return std::vector<FreeModuleVector>(m->begin() + 1, m->end());
    }
  }
  std::vector<FreeModuleVector> out;
  for (const auto& g : der.generators)
    if (!(g == chi)) out.push_back(g);
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Certified:
      return "certified";
    case Verdict::RefutedWithWitness:
      return "refuted-with-witness";
    case Verdict::Inconclusive:
      break;
  }
  return "inconclusive";
}

namespace {

RouteReport run_route(std::string name, const DerivationModule& der, const DerivationModule& a,
                      const FreeModuleVector& chi, const CriterionOptions& opts) {
  RouteReport route;
  route.name = std::move(name);
  route.module = a.generators;
  route.split = split_check(der, chi, a.generators);
  route.grade = grade_criterion(a, opts.dim_z);
  const SymPresentation sp = sym_presentation(a);
  for (int k = 1; k <= opts.max_sym_degree; ++k) {
    route.torsion.emplace_back(k, torsion_test_symk(sp, k));
    if (opts.depth_checks && a.grading) {
      const SymPiece piece = sym_piece(sp, k);
      route.depth.emplace_back(k, depth_via_resolution(piece, sp.base_dim));
    }
  }
  route.certified = route.split && route.grade.certified;
  return route;
}

}  // namespace

CriterionReport criterion(const Polynomial& f, const CriterionOptions& opts) {
  CriterionReport rep;
  rep.f = f;
  rep.homogeneous = quasi_homogeneity(f).has_value();
  rep.euler = euler_field(f);
  const DerivationModule der = log_derivations(f, true);
  rep.freeness = saito_freeness_test(der);
  rep.claim = "V0 = O[Der(log D)]";

  if (rep.euler.status == EulerStatus::Found) {
    const FreeModuleVector& chi = *rep.euler.field;
    rep.routes.push_back(run_route("annihilator", der, ann_theta(f, true), chi, opts));
    rep.routes.push_back(
        run_route("complement", der, derivation_module(f, complement_of_euler(der, chi)), chi, opts));
  }

  if (rep.freeness.verdict == Freeness::FreeWithBasis) {
    rep.verdict = Verdict::Certified;
    rep.basis = "free-divisor";
    return rep;
  }
  for (const auto& r : rep.routes)
    if (r.certified) {
      rep.verdict = Verdict::Certified;
      rep.basis = "grade-criterion";
      return rep;
    }
  for (const auto& r : rep.routes) {
    if (!r.split) continue;
    for (const auto& [k, t] : r.torsion)
      if (!t.torsion_free) {
        rep.verdict = Verdict::RefutedWithWitness;
        rep.basis = "linear-type-equivalence";
        rep.claim = "Sym Der(log D) is O-torsion free";
        return rep;
      }
  }
  rep.verdict = Verdict::Inconclusive;
  rep.basis = rep.euler.status == EulerStatus::Found ? "grade-criterion" : "euler-homogeneity";
  return rep;
}

}  // namespace logdiv
