#include "logdiv/groebner.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace logdiv {

// ---------------------------------------------------------------- FreeModuleVector

FreeModuleVector::FreeModuleVector(std::size_t rank, std::size_t ring_dim)
    : n_(ring_dim), comps_(rank, Polynomial(ring_dim)) {}

FreeModuleVector::FreeModuleVector(std::vector<Polynomial> components) : comps_(std::move(components)) {
  if (!comps_.empty()) n_ = comps_[0].ring_dim();
  for (const auto& p : comps_)
    if (p.ring_dim() != n_) throw dimension_error("FreeModuleVector: components in different rings");
}

FreeModuleVector FreeModuleVector::unit(std::size_t rank, std::size_t ring_dim, std::size_t i) {
  FreeModuleVector v(rank, ring_dim);
  v.comps_.at(i) = Polynomial::constant(ring_dim, 1);
  return v;
}

bool FreeModuleVector::is_zero() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

FreeModuleVector& FreeModuleVector::operator+=(const FreeModuleVector& o) {
  if (o.rank() != rank()) throw dimension_error("FreeModuleVector: rank mismatch");
  for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] += o.comps_[i];
  return *this;
}

FreeModuleVector& FreeModuleVector::operator-=(const FreeModuleVector& o) {
  if (o.rank() != rank()) throw dimension_error("FreeModuleVector: rank mismatch");
  for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] -= o.comps_[i];
  return *this;
}

FreeModuleVector operator*(const Polynomial& p, const FreeModuleVector& v) {
  FreeModuleVector r(v);
  for (auto& c : r.comps_) c = p * c;
  return r;
}

std::string FreeModuleVector::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (i) os << ", ";
    os << comps_[i].to_string();
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------- TermOrder

TermOrder TermOrder::degrevlex(std::vector<int> weights) {
  TermOrder o;
  o.weights = std::move(weights);
  return o;
}

TermOrder TermOrder::lex() {
  TermOrder o;
  o.kind = Kind::Lex;
  return o;
}

TermOrder TermOrder::block(std::size_t k, std::vector<int> weights) {
  TermOrder o;
  o.elimination_block = k;
  o.weights = std::move(weights);
  return o;
}

namespace {

int weighted_range_degree(const Monomial& m, const std::vector<int>& w, std::size_t lo, std::size_t hi) {
  int d = 0;
  for (std::size_t i = lo; i < hi; ++i) d += (w.empty() ? 1 : w[i]) * static_cast<int>(m[i]);
  return d;
}

int revlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  for (std::size_t i = hi; i-- > lo;)
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  return 0;
}

}  // namespace

int TermOrder::compare_monomials(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.size();
  if (kind == Kind::Lex) {
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
  }
  const std::size_t k = std::min(elimination_block, n);
  if (k > 0) {
    const int da = weighted_range_degree(a, weights, 0, k), db = weighted_range_degree(b, weights, 0, k);
    if (da != db) return da < db ? -1 : 1;
    if (int c = revlex_range(a, b, 0, k)) return c;
  }
  const int da = weighted_range_degree(a, weights, k, n), db = weighted_range_degree(b, weights, k, n);
  if (da != db) return da < db ? -1 : 1;
  return revlex_range(a, b, k, n);
}

int TermOrder::degree(const Monomial& m, std::size_t comp) const {
  int d = m.weighted_degree(weights);
  if (comp < shifts.size()) d += shifts[comp];
  return d;
}

int TermOrder::compare(const Monomial& a, std::size_t ca, const Monomial& b, std::size_t cb) const {
  if (priority_components) {
    const bool pa = ca < priority_components, pb = cb < priority_components;
    if (pa != pb) return pa ? 1 : -1;
  }
  if (position == Position::PositionOverTerm) {
    if (ca != cb) return ca < cb ? -1 : 1;
    return compare_monomials(a, b);
  }
  if (!shifts.empty() && kind == Kind::DegRevLex && elimination_block == 0) {
    const int da = degree(a, ca), db = degree(b, cb);
    if (da != db) return da < db ? -1 : 1;
  }
  if (int c = compare_monomials(a, b)) return c;
  if (ca != cb) return ca < cb ? -1 : 1;
  return 0;
}

int Grading::degree(const Monomial& m, std::size_t comp) const {
  int d = m.weighted_degree(weights);
  if (comp < shifts.size()) d += shifts[comp];
  return d;
}

std::optional<int> homogeneous_degree(const FreeModuleVector& v, const Grading& g) {
  std::optional<int> d;
  for (std::size_t c = 0; c < v.rank(); ++c) {
    for (const auto& t : v[c].terms()) {
      const int e = g.degree(t.mono, c);
      if (!d) d = e;
      else if (*d != e) return std::nullopt;
    }
  }
  return d;
}

// ---------------------------------------------------------------- internal vectors

namespace {

using detail::MTerm;
using detail::Vec;

struct Ctx {
  const TermOrder& order;
  std::size_t rank;
  std::size_t n;

  int cmp(const MTerm& a, const MTerm& b) const { return order.compare(a.mono, a.comp, b.mono, b.comp); }
};

Vec to_vec(const FreeModuleVector& v, const Ctx& ctx) {
  if (v.rank() != ctx.rank) throw dimension_error("module rank mismatch");
  Vec out;
  for (std::size_t c = 0; c < v.rank(); ++c) {
    if (v[c].ring_dim() != ctx.n) throw dimension_error("module ring mismatch");
    for (const auto& t : v[c].terms()) out.push_back({t.mono, static_cast<std::uint32_t>(c), t.coef});
  }
  std::sort(out.begin(), out.end(), [&](const MTerm& a, const MTerm& b) { return ctx.cmp(a, b) > 0; });
  return out;
}

FreeModuleVector from_vec(const Vec& v, std::size_t rank, std::size_t n) {
  std::vector<std::vector<Term>> buckets(rank);
  for (const auto& t : v) buckets[t.comp].push_back({t.mono, t.coef});
  std::vector<Polynomial> comps;
  comps.reserve(rank);
  for (auto& b : buckets) comps.push_back(Polynomial::from_terms(n, std::move(b)));
  FreeModuleVector out(std::move(comps));
  if (rank == 0) return FreeModuleVector(0, n);
  return out;
}

void make_monic(Vec& v) {
  if (v.empty() || v.front().coef == 1) return;
  const Rational inv = 1 / v.front().coef;
  for (auto& t : v) t.coef *= inv;
}

// out = a[ia..] - s * m * b[ib..], all in descending order.
Vec sub_scaled(const Vec& a, std::size_t ia, const Rational& s, const Monomial& m, const Vec& b, std::size_t ib,
               const Ctx& ctx) {
  Vec out;
  out.reserve(a.size() - ia + b.size() - ib);
  MTerm bt;
  bool have_b = false;
  auto load_b = [&]() {
    if (ib < b.size()) {
      bt.mono = b[ib].mono * m;
      bt.comp = b[ib].comp;
      have_b = true;
    } else {
      have_b = false;
    }
  };
  load_b();
  while (ia < a.size() && have_b) {
    const int c = ctx.cmp(a[ia], bt);
    if (c > 0) {
      out.push_back(a[ia++]);
    } else if (c < 0) {
      out.push_back({bt.mono, bt.comp, -s * b[ib].coef});
      ++ib;
      load_b();
    } else {
      Rational v = a[ia].coef - s * b[ib].coef;
      if (sgn(v) != 0) out.push_back({a[ia].mono, a[ia].comp, std::move(v)});
      ++ia;
      ++ib;
      load_b();
    }
  }
  for (; ia < a.size(); ++ia) out.push_back(a[ia]);
  while (have_b) {
    out.push_back({bt.mono, bt.comp, -s * b[ib].coef});
    ++ib;
    load_b();
  }
  return out;
}

struct Reducer {
  const Vec* v;
  Monomial lm;
  std::uint32_t comp;
  std::uint32_t mask;
};

const Reducer* find_reducer(const std::vector<Reducer>& rs, const MTerm& t) {
  const std::uint32_t tm = t.mono.support_mask();
  for (const auto& r : rs) {
    if (r.comp != t.comp) continue;
    if (r.mask & ~tm) continue;
    if (r.lm.divides(t.mono)) return &r;
  }
  return nullptr;
}

// Full reduction (top + tail) unless top_only.
Vec reduce(Vec r, const std::vector<Reducer>& rs, const Ctx& ctx, bool top_only = false) {
  Vec out;
  std::size_t pos = 0;
  while (pos < r.size()) {
    const MTerm& lead = r[pos];
    const Reducer* red = find_reducer(rs, lead);
    if (!red) {
      if (top_only) {
        out.insert(out.end(), std::make_move_iterator(r.begin() + static_cast<std::ptrdiff_t>(pos)),
                   std::make_move_iterator(r.end()));
        return out;
      }
      out.push_back(std::move(r[pos]));
      ++pos;
      continue;
    }
    const Vec& g = *red->v;
    const Rational s = lead.coef / g.front().coef;
    const Monomial m = red->lm.quotient_of(lead.mono);
    r = sub_scaled(r, pos + 1, s, m, g, 1, ctx);
    pos = 0;
  }
  return out;
}

Reducer make_reducer(const Vec& v) { return {&v, v.front().mono, v.front().comp, v.front().mono.support_mask()}; }

int sugar_of(const Vec& v, const TermOrder& order) {
  int s = std::numeric_limits<int>::min();
  for (const auto& t : v) s = std::max(s, order.degree(t.mono, t.comp));
  return s;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::uint32_t comp;
  int sugar;
};

class Buchberger {
 public:
  Buchberger(const Ctx& ctx) : ctx_(ctx) {}

  void add_input(Vec v) {
    std::vector<Reducer> rs = active_reducers();
    v = reduce(std::move(v), rs, ctx_);
    if (v.empty()) return;
    make_monic(v);
    insert(std::move(v));
  }

  void run() {
    while (!pairs_.empty()) {
      auto best = pairs_.begin();
      for (auto it = pairs_.begin() + 1; it != pairs_.end(); ++it) {
        if (it->sugar != best->sugar) {
          if (it->sugar < best->sugar) best = it;
          continue;
        }
        const int c = ctx_.order.compare(it->lcm, it->comp, best->lcm, best->comp);
        if (c < 0 || (c == 0 && std::tie(it->i, it->j) < std::tie(best->i, best->j))) best = it;
      }
      Pair p = *best;
      pairs_.erase(best);
      Vec s = spoly(p);
      std::vector<Reducer> rs = active_reducers();
      s = reduce(std::move(s), rs, ctx_);
      if (s.empty()) continue;
      make_monic(s);
      insert(std::move(s), p.sugar);
    }
  }

  std::vector<Vec> reduced_basis() {
    std::vector<Vec> basis;
    for (std::size_t i = 0; i < elems_.size(); ++i)
      if (!redundant_[i]) basis.push_back(elems_[i]);
    if (basis.empty()) return basis;
    std::sort(basis.begin(), basis.end(), [&](const Vec& a, const Vec& b) { return ctx_.cmp(a.front(), b.front()) < 0; });
    // A constant generator in the ideal case makes the basis {1}.
    for (auto& b : basis) {
      if (ctx_.rank == 1 && b.front().mono.is_one()) {
        Vec one{b.front()};
        one.front().coef = 1;
        return {one};
      }
    }
    std::vector<Vec> out(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      std::vector<Reducer> rs;
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (j != i) rs.push_back(make_reducer(basis[j]));
      Vec tail(basis[i].begin() + 1, basis[i].end());
      tail = reduce(std::move(tail), rs, ctx_);
      Vec v{basis[i].front()};
      v.insert(v.end(), std::make_move_iterator(tail.begin()), std::make_move_iterator(tail.end()));
      make_monic(v);
      out[i] = std::move(v);
    }
    return out;
  }

 private:
  std::vector<Reducer> active_reducers() const {
    std::vector<Reducer> rs;
    for (std::size_t i = 0; i < elems_.size(); ++i)
      if (!redundant_[i]) rs.push_back(make_reducer(elems_[i]));
    return rs;
  }

  Vec spoly(const Pair& p) const {
    const Vec& a = elems_[p.i];
    const Vec& b = elems_[p.j];
    const Monomial ma = a.front().mono.quotient_of(p.lcm);
    const Monomial mb = b.front().mono.quotient_of(p.lcm);
    Vec sa;
    sa.reserve(a.size());
    for (std::size_t k = 1; k < a.size(); ++k) sa.push_back({a[k].mono * ma, a[k].comp, a[k].coef});
    // both monic: S = ma*a - mb*b, leading terms cancel
    return sub_scaled(sa, 0, Rational(1), mb, b, 1, ctx_);
  }

  void insert(Vec h, int sugar = std::numeric_limits<int>::min()) {
    const std::size_t t = elems_.size();
    const Monomial lm = h.front().mono;
    const std::uint32_t comp = h.front().comp;
    sugar = std::max(sugar, sugar_of(h, ctx_.order));
    elems_.push_back(std::move(h));
    redundant_.push_back(false);
    sugars_.push_back(sugar);
    const bool ideal = ctx_.rank == 1;

    struct Cand {
      std::size_t g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> cands;
    for (std::size_t g = 0; g < t; ++g) {
      if (redundant_[g] || elems_[g].front().comp != comp) continue;
      const Monomial& lg = elems_[g].front().mono;
      cands.push_back({g, lm.lcm(lg), ideal && lm.coprime(lg)});
    }
    // Gebauer-Moeller: drop new pairs whose lcm is a proper multiple of another.
    std::vector<Cand> kept;
    for (std::size_t a = 0; a < cands.size(); ++a) {
      bool keep = cands[a].coprime;
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < cands.size() && keep; ++b)
          if (cands[b].lcm.divides(cands[a].lcm)) keep = false;
        for (std::size_t b = 0; b < kept.size() && keep; ++b)
          if (kept[b].lcm.divides(cands[a].lcm)) keep = false;
      }
      if (keep) kept.push_back(cands[a]);
    }
    // Old pairs made superfluous by the new leading term.
    std::erase_if(pairs_, [&](const Pair& p) {
      if (p.comp != comp || !lm.divides(p.lcm)) return false;
      const Monomial li = lm.lcm(elems_[p.i].front().mono);
      const Monomial lj = lm.lcm(elems_[p.j].front().mono);
      return !(li == p.lcm) && !(lj == p.lcm);
    });
    for (const auto& c : kept) {
      if (c.coprime) continue;
      const Monomial& lg = elems_[c.g].front().mono;
      const int s1 = sugars_[c.g] + lg.quotient_of(c.lcm).weighted_degree(ctx_.order.weights);
      const int s2 = sugars_[t] + lm.quotient_of(c.lcm).weighted_degree(ctx_.order.weights);
      pairs_.push_back({c.g, t, c.lcm, comp, std::max(s1, s2)});
    }
    for (std::size_t g = 0; g < t; ++g) {
      if (redundant_[g] || elems_[g].front().comp != comp) continue;
      if (lm.divides(elems_[g].front().mono)) redundant_[g] = true;
    }
  }

  const Ctx& ctx_;
  std::vector<Vec> elems_;
  std::vector<bool> redundant_;
  std::vector<int> sugars_;
  std::vector<Pair> pairs_;
};

}  // namespace

GroebnerBasis make_groebner_basis(std::size_t rank, std::size_t n, TermOrder order, std::vector<Vec> elems) {
  GroebnerBasis gb;
  gb.rank_ = rank;
  gb.n_ = n;
  gb.order_ = std::move(order);
  gb.elems_ = std::move(elems);
  for (const auto& v : gb.elems_) gb.gens_.push_back(from_vec(v, rank, n));
  return gb;
}

bool GroebnerBasis::is_unit_ideal() const {
  return rank_ == 1 && elems_.size() == 1 && elems_[0].front().mono.is_one();
}

std::vector<Polynomial> GroebnerBasis::polynomials() const {
  if (rank_ != 1) throw dimension_error("GroebnerBasis::polynomials: not an ideal");
  std::vector<Polynomial> out;
  for (const auto& g : gens_) out.push_back(g[0]);
  return out;
}

GroebnerBasis buchberger(std::span<const FreeModuleVector> gens, const TermOrder& order, std::size_t rank,
                         std::size_t ring_dim) {
  if (!gens.empty()) {
    rank = gens[0].rank();
    ring_dim = gens[0].ring_dim();
  }
  Ctx ctx{order, rank, ring_dim};
  std::vector<Vec> inputs;
  for (const auto& g : gens) {
    Vec v = to_vec(g, ctx);
    if (!v.empty()) inputs.push_back(std::move(v));
  }
  std::sort(inputs.begin(), inputs.end(), [&](const Vec& a, const Vec& b) { return ctx.cmp(a.front(), b.front()) < 0; });
  Buchberger bb(ctx);
  for (auto& v : inputs) bb.add_input(std::move(v));
  bb.run();
  return make_groebner_basis(rank, ring_dim, order, bb.reduced_basis());
}

GroebnerBasis ideal_basis(std::span<const Polynomial> gens, const TermOrder& order) {
  std::vector<FreeModuleVector> vs;
  for (const auto& p : gens) vs.emplace_back(std::vector<Polynomial>{p});
  const std::size_t n = gens.empty() ? 0 : gens[0].ring_dim();
  return buchberger(vs, order, 1, n);
}

FreeModuleVector normal_form(const FreeModuleVector& v, const GroebnerBasis& gb) {
  if (v.rank() != gb.rank()) throw dimension_error("normal_form: rank mismatch");
  if (gb.ring_dim() != 0 && v.ring_dim() != gb.ring_dim()) throw dimension_error("normal_form: ring mismatch");
  Ctx ctx{gb.order(), gb.rank(), v.ring_dim()};
  std::vector<Reducer> rs;
  for (const auto& e : gb.internal()) rs.push_back(make_reducer(e));
  return from_vec(reduce(to_vec(v, ctx), rs, ctx), gb.rank(), v.ring_dim());
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  return normal_form(FreeModuleVector(std::vector<Polynomial>{p}), gb)[0];
}

bool contains(const GroebnerBasis& gb, const FreeModuleVector& v) { return normal_form(v, gb).is_zero(); }
bool contains(const GroebnerBasis& gb, const Polynomial& p) { return normal_form(p, gb).is_zero(); }

bool same_module(std::span<const FreeModuleVector> a, std::span<const FreeModuleVector> b, const TermOrder& order) {
  if (a.empty() || b.empty()) {
    auto all_zero = [](std::span<const FreeModuleVector> s) {
      return std::all_of(s.begin(), s.end(), [](const FreeModuleVector& v) { return v.is_zero(); });
    };
    return all_zero(a) && all_zero(b);
  }
  const GroebnerBasis ga = buchberger(a, order);
  const GroebnerBasis gb = buchberger(b, order);
  for (const auto& v : b)
    if (!contains(ga, v)) return false;
  for (const auto& v : a)
    if (!contains(gb, v)) return false;
  return true;
}

bool is_groebner_basis(std::span<const FreeModuleVector> gens, const TermOrder& order) {
  if (gens.empty()) return true;
  Ctx ctx{order, gens[0].rank(), gens[0].ring_dim()};
  std::vector<Vec> vs;
  for (const auto& g : gens) {
    Vec v = to_vec(g, ctx);
    if (v.empty()) continue;
    make_monic(v);
    vs.push_back(std::move(v));
  }
  std::vector<Reducer> rs;
  for (const auto& v : vs) rs.push_back(make_reducer(v));
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (vs[i].front().comp != vs[j].front().comp) continue;
      const Monomial l = vs[i].front().mono.lcm(vs[j].front().mono);
      const Monomial mi = vs[i].front().mono.quotient_of(l);
      const Monomial mj = vs[j].front().mono.quotient_of(l);
      Vec si;
      for (std::size_t k = 1; k < vs[i].size(); ++k) si.push_back({vs[i][k].mono * mi, vs[i][k].comp, vs[i][k].coef});
      Vec s = sub_scaled(si, 0, Rational(1), mj, vs[j], 1, ctx);
      if (!reduce(std::move(s), rs, ctx, true).empty()) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- syzygies and lifts

namespace {

// GB of the graph module {(g_i, e_i)} in R^{m+k} with the g-block eliminated first.
GroebnerBasis graph_basis(std::span<const FreeModuleVector> gens, const Grading& grading) {
  const std::size_t m = gens[0].rank();
  const std::size_t n = gens[0].ring_dim();
  const std::size_t k = gens.size();

  TermOrder order;
  order.weights = grading.weights;
  order.priority_components = m;
  order.shifts.assign(m + k, 0);
  for (std::size_t c = 0; c < m && c < grading.shifts.size(); ++c) order.shifts[c] = grading.shifts[c];
  Grading g2{grading.weights, std::vector<int>(order.shifts.begin(), order.shifts.begin() + static_cast<std::ptrdiff_t>(m))};
  bool graded = true;
  std::vector<int> tag_deg(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (gens[i].is_zero()) continue;
    auto d = homogeneous_degree(gens[i], g2);
    if (!d) {
      graded = false;
      break;
    }
    tag_deg[i] = *d;
  }
  if (graded) {
    for (std::size_t i = 0; i < k; ++i) order.shifts[m + i] = tag_deg[i];
  } else {
    order.shifts.clear();
  }

  std::vector<FreeModuleVector> ext;
  ext.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (gens[i].rank() != m || gens[i].ring_dim() != n) throw dimension_error("syzygies: inconsistent generators");
    std::vector<Polynomial> comps = gens[i].components();
    for (std::size_t j = 0; j < k; ++j) comps.push_back(j == i ? Polynomial::constant(n, 1) : Polynomial(n));
    ext.emplace_back(std::move(comps));
  }
  return buchberger(ext, order, m + k, n);
}

FreeModuleVector tail_part(const FreeModuleVector& v, std::size_t m) {
  std::vector<Polynomial> comps(v.components().begin() + static_cast<std::ptrdiff_t>(m), v.components().end());
  return FreeModuleVector(std::move(comps));
}

bool head_zero(const FreeModuleVector& v, std::size_t m) {
  for (std::size_t c = 0; c < m; ++c)
    if (!v[c].is_zero()) return false;
  return true;
}

}  // namespace

std::vector<FreeModuleVector> syzygies(std::span<const FreeModuleVector> gens, const Grading& grading) {
  if (gens.empty()) return {};
  const std::size_t m = gens[0].rank();
  const GroebnerBasis gb = graph_basis(gens, grading);
  std::vector<FreeModuleVector> out;
  for (const auto& v : gb.generators())
    if (head_zero(v, m)) out.push_back(tail_part(v, m));
  return out;
}

std::vector<FreeModuleVector> syzygies(std::span<const Polynomial> gens, const Grading& grading) {
  std::vector<FreeModuleVector> vs;
  for (const auto& p : gens) vs.emplace_back(std::vector<Polynomial>{p});
  return syzygies(vs, grading);
}

std::optional<std::vector<Polynomial>> lift(const FreeModuleVector& v, std::span<const FreeModuleVector> gens,
                                            const Grading& grading) {
  if (gens.empty()) {
    if (v.is_zero()) return std::vector<Polynomial>{};
    return std::nullopt;
  }
  const std::size_t m = gens[0].rank();
  const std::size_t n = gens[0].ring_dim();
  if (v.rank() != m) throw dimension_error("lift: rank mismatch");
  const GroebnerBasis gb = graph_basis(gens, grading);
  std::vector<Polynomial> comps = v.components();
  for (std::size_t j = 0; j < gens.size(); ++j) comps.emplace_back(n);
  const FreeModuleVector r = normal_form(FreeModuleVector(std::move(comps)), gb);
  if (!head_zero(r, m)) return std::nullopt;
  std::vector<Polynomial> coeffs;
  for (std::size_t j = 0; j < gens.size(); ++j) coeffs.push_back(-r[m + j]);
  return coeffs;
}

std::optional<std::vector<FreeModuleVector>> minimalize(std::span<const FreeModuleVector> gens, const Grading& grading) {
  struct Item {
    int deg;
    std::size_t idx;
  };
  std::vector<Item> items;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].is_zero()) continue;
    auto d = homogeneous_degree(gens[i], grading);
    if (!d) return std::nullopt;
    items.push_back({*d, i});
  }
  std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.deg < b.deg; });
  std::vector<FreeModuleVector> kept;
  TermOrder order = TermOrder::degrevlex(grading.weights);
  order.shifts = grading.shifts;
  GroebnerBasis gb;
  for (const auto& it : items) {
    if (!kept.empty() && contains(gb, gens[it.idx])) continue;
    kept.push_back(gens[it.idx]);
    gb = buchberger(kept, order);
  }
  return kept;
}

// ---------------------------------------------------------------- ideal operations

GroebnerBasis module_quotient(std::span<const FreeModuleVector> gens, const Polynomial& g, const TermOrder& order,
                              std::size_t rank) {
  if (g.is_zero()) throw std::invalid_argument("module_quotient: quotient by zero");
  if (!gens.empty()) rank = gens[0].rank();
  const std::size_t n = g.ring_dim();
  if (gens.empty()) return buchberger({}, order, rank, n);
  std::vector<FreeModuleVector> all;
  for (std::size_t c = 0; c < rank; ++c) {
    FreeModuleVector e(rank, n);
    e[c] = g;
    all.push_back(std::move(e));
  }
  all.insert(all.end(), gens.begin(), gens.end());
  // Grade the g*e_c generators consistently when possible.
  Grading grading{order.weights, order.shifts};
  std::vector<FreeModuleVector> head;
  for (const auto& s : syzygies(all, grading)) {
    std::vector<Polynomial> comps(s.components().begin(), s.components().begin() + static_cast<std::ptrdiff_t>(rank));
    head.emplace_back(std::move(comps));
  }
  return buchberger(head, order, rank, n);
}

GroebnerBasis ideal_quotient(const GroebnerBasis& ideal, const Polynomial& g) {
  if (ideal.rank() != 1) throw dimension_error("ideal_quotient: not an ideal");
  return module_quotient(ideal.generators(), g, ideal.order(), 1);
}

GroebnerBasis saturation(const GroebnerBasis& ideal, const Polynomial& g) {
  if (ideal.rank() != 1) throw dimension_error("saturation: not an ideal");
  if (g.is_zero()) throw std::invalid_argument("saturation: by zero");
  const std::size_t n = g.ring_dim();
  if (ideal.empty()) return ideal;
  // (I + <t g - 1>) intersected with R, t the first variable of the extended ring.
  std::vector<std::size_t> shift(n);
  std::iota(shift.begin(), shift.end(), std::size_t{1});
  std::vector<Polynomial> gens;
  for (const auto& p : ideal.polynomials()) gens.push_back(p.remap(n + 1, shift));
  gens.push_back(Polynomial::variable(n + 1, 0) * g.remap(n + 1, shift) - Polynomial::constant(n + 1, 1));
  TermOrder elim = TermOrder::block(1);
  if (!ideal.order().weights.empty()) {
    elim.weights = {1};
    elim.weights.insert(elim.weights.end(), ideal.order().weights.begin(), ideal.order().weights.end());
  }
  const GroebnerBasis big = ideal_basis(gens, elim);
  std::vector<Polynomial> kept;
  for (const auto& p : big.polynomials()) {
    bool has_t = false;
    for (const auto& t : p.terms()) has_t |= t.mono[0] != 0;
    if (has_t) continue;
    std::vector<Term> terms;
    for (const auto& t : p.terms()) {
      Monomial m(n);
      for (std::size_t i = 0; i < n; ++i) m.set(i, t.mono[i + 1]);
      terms.push_back({m, t.coef});
    }
    kept.push_back(Polynomial::from_terms(n, std::move(terms)));
  }
  std::vector<FreeModuleVector> vs;
  for (auto& p : kept) vs.emplace_back(std::vector<Polynomial>{p});
  return buchberger(vs, ideal.order(), 1, n);
}

GroebnerBasis eliminate(std::span<const Polynomial> gens, std::span<const std::size_t> vars, const TermOrder& order) {
  if (gens.empty()) throw std::invalid_argument("eliminate: no generators");
  const std::size_t n = gens[0].ring_dim();
  std::vector<bool> elim(n, false);
  for (auto v : vars) {
    if (v >= n) throw dimension_error("eliminate: variable out of range");
    elim[v] = true;
  }
  // Permute eliminated variables to the front.
  std::vector<std::size_t> perm(n), inv(n);
  std::size_t pos = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (elim[i]) perm[i] = pos++;
  const std::size_t k = pos;
  for (std::size_t i = 0; i < n; ++i)
    if (!elim[i]) perm[i] = pos++;
  for (std::size_t i = 0; i < n; ++i) inv[perm[i]] = i;

  std::vector<int> w;
  if (!order.weights.empty()) {
    w.resize(n);
    for (std::size_t i = 0; i < n; ++i) w[perm[i]] = order.weights[i];
  }
  std::vector<Polynomial> moved;
  for (const auto& p : gens) moved.push_back(p.remap(n, perm));
  const GroebnerBasis big = ideal_basis(moved, TermOrder::block(k, w));
  std::vector<FreeModuleVector> kept;
  for (const auto& p : big.polynomials()) {
    bool uses = false;
    for (const auto& t : p.terms())
      for (std::size_t i = 0; i < k; ++i) uses |= t.mono[i] != 0;
    if (!uses) kept.emplace_back(std::vector<Polynomial>{p.remap(n, inv)});
  }
  return buchberger(kept, order, 1, n);
}

GroebnerBasis eliminate(const GroebnerBasis& ideal, std::span<const std::size_t> vars) {
  if (ideal.rank() != 1) throw dimension_error("eliminate: not an ideal");
  if (ideal.empty()) return ideal;
  const auto ps = ideal.polynomials();
  return eliminate(ps, vars, ideal.order());
}

int compare_vectors(const FreeModuleVector& a, const FreeModuleVector& b, const TermOrder& order) {
  const Ctx ctx{order, a.rank(), a.ring_dim()};
  const Vec va = to_vec(a, ctx), vb = to_vec(b, ctx);
  for (std::size_t i = 0; i < va.size() && i < vb.size(); ++i) {
    if (int c = ctx.cmp(va[i], vb[i])) return c;
    if (va[i].coef != vb[i].coef) return va[i].coef < vb[i].coef ? -1 : 1;
  }
  if (va.size() != vb.size()) return va.size() < vb.size() ? -1 : 1;
  return 0;
}

int codim(const GroebnerBasis& ideal) {
  if (ideal.rank() != 1) throw dimension_error("codim: not an ideal");
  if (ideal.is_unit_ideal()) return kUnitIdealCodim;
  const std::size_t n = ideal.ring_dim();
  if (ideal.empty()) return 0;
  std::vector<std::uint32_t> supports;
  for (const auto& v : ideal.internal()) supports.push_back(v.front().mono.support_mask());
  // Largest set S of variables containing no leading-monomial support.
  int best = 0;
  auto independent = [&](std::uint32_t s) {
    for (auto m : supports)
      if ((m & ~s) == 0) return false;
    return true;
  };
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t s, int size) -> void {
    if (size + static_cast<int>(n - i) <= best) return;
    if (i == n) {
      best = std::max(best, size);
      return;
    }
    const std::uint32_t with = s | (1u << i);
    if (independent(with)) self(self, i + 1, with, size + 1);
    self(self, i + 1, s, size);
  };
  rec(rec, 0, 0u, 0);
  return static_cast<int>(n) - best;
}

bool local_membership_at_origin(const Polynomial& g, const GroebnerBasis& ideal) {
  if (g.is_zero()) return true;
  const GroebnerBasis q = ideal_quotient(ideal, g);
  for (const auto& p : q.polynomials())
    if (sgn(p.evaluate_at_origin()) != 0) return true;
  return false;
}

}  // namespace logdiv
