#include "logdiv/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "logdiv/detail/parser.hpp"
#include "logdiv/linalg.hpp"

namespace logdiv {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::size_t n) {
  if (n > kMaxVars) throw dimension_error("Monomial: too many variables");
  n_ = static_cast<std::uint8_t>(n);
}

Monomial::Monomial(std::initializer_list<unsigned> exps) : Monomial(exps.size()) {
  std::size_t i = 0;
  for (unsigned e : exps) e_[i++] = static_cast<std::uint16_t>(e);
}

Monomial::Monomial(std::span<const int> exps) : Monomial(exps.size()) {
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0) throw std::invalid_argument("Monomial: negative exponent");
    e_[i] = static_cast<std::uint16_t>(exps[i]);
  }
}

int Monomial::degree() const {
  int d = 0;
  for (std::size_t i = 0; i < n_; ++i) d += e_[i];
  return d;
}

int Monomial::weighted_degree(std::span<const int> weights) const {
  if (weights.empty()) return degree();
  int d = 0;
  for (std::size_t i = 0; i < n_; ++i) d += weights[i] * static_cast<int>(e_[i]);
  return d;
}

bool Monomial::is_one() const {
  for (std::size_t i = 0; i < n_; ++i)
    if (e_[i]) return false;
  return true;
}

std::uint32_t Monomial::support_mask() const {
  std::uint32_t m = 0;
  for (std::size_t i = 0; i < n_; ++i)
    if (e_[i]) m |= (1u << i);
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < n_; ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < n_; ++i) r.e_[i] = static_cast<std::uint16_t>(e_[i] + other.e_[i]);
  return r;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial r(other);
  for (std::size_t i = 0; i < n_; ++i) r.e_[i] = static_cast<std::uint16_t>(other.e_[i] - e_[i]);
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < n_; ++i) r.e_[i] = std::max(e_[i], other.e_[i]);
  return r;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < n_; ++i)
    if (e_[i] && other.e_[i]) return false;
  return true;
}

Monomial Monomial::remap(std::size_t new_n, std::span<const std::size_t> map) const {
  Monomial r(new_n);
  for (std::size_t i = 0; i < n_; ++i) r.e_[map[i]] = static_cast<std::uint16_t>(r.e_[map[i]] + e_[i]);
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = n_;
  for (std::size_t i = 0; i < n_; ++i) h = h * 1000003u ^ e_[i];
  return h;
}

int compare_degrevlex(const Monomial& a, const Monomial& b) {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<Monomial> monomials_of_degree(std::size_t n, int deg) {
  std::vector<Monomial> out;
  if (deg < 0) return out;
  if (n == 0) {
    if (deg == 0) out.emplace_back(0);
    return out;
  }
  Monomial m(n);
  // Enumerate compositions recursively: exponent of variable i ranges downward.
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == n) {
      m.set(i, static_cast<unsigned>(left));
      out.push_back(m);
      return;
    }
    for (int e = left; e >= 0; --e) {
      m.set(i, static_cast<unsigned>(e));
      self(self, i + 1, left - e);
    }
  };
  rec(rec, 0, deg);
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return compare_degrevlex(a, b) > 0; });
  return out;
}

// ---------------------------------------------------------------- Polynomial

namespace {

bool term_greater(const Term& a, const Term& b) { return compare_degrevlex(a.mono, b.mono) > 0; }

// Merge two descending term lists: a + s*b.
std::vector<Term> merge_axpy(const std::vector<Term>& a, const Rational& s, const std::vector<Term>& b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const int c = compare_degrevlex(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].mono, s * b[j].coef});
      ++j;
    } else {
      Rational v = a[i].coef + s * b[j].coef;
      if (sgn(v) != 0) out.push_back({a[i].mono, std::move(v)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].mono, s * b[j].coef});
  return out;
}

}  // namespace

Polynomial Polynomial::constant(std::size_t n, const Rational& c) {
  Polynomial p(n);
  if (sgn(c) != 0) p.terms_.push_back({Monomial(n), c});
  return p;
}

Polynomial Polynomial::variable(std::size_t n, std::size_t i) {
  if (i >= n) throw dimension_error("Polynomial::variable: index out of range");
  Monomial m(n);
  m.set(i, 1);
  return monomial(m, 1);
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p(m.size());
  if (sgn(c) != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(std::size_t n, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.mono.size() != n) throw dimension_error("Polynomial::from_terms: monomial size mismatch");
  std::sort(terms.begin(), terms.end(), term_greater);
  Polynomial p(n);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coef += t.coef;
      if (sgn(p.terms_.back().coef) == 0) p.terms_.pop_back();
    } else if (sgn(t.coef) != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

int Polynomial::degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree(); }

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& mm) {
    return compare_degrevlex(t.mono, mm) > 0;
  });
  if (it != terms_.end() && it->mono == m) return it->coef;
  return 0;
}

void Polynomial::check_ring(const Polynomial& q) const {
  if (n_ != q.n_)
    throw dimension_error("polynomial ring mismatch: " + std::to_string(n_) + " vs " + std::to_string(q.n_));
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
  check_ring(q);
  if (q.terms_.empty()) return *this;
  terms_ = merge_axpy(terms_, 1, q.terms_);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
  check_ring(q);
  if (q.terms_.empty()) return *this;
  terms_ = merge_axpy(terms_, -1, q.terms_);
  return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  p.check_ring(q);
  if (p.is_zero() || q.is_zero()) return Polynomial(p.n_);
  if (q.terms_.size() == 1) return p.mul_term(q.terms_[0].mono, q.terms_[0].coef);
  if (p.terms_.size() == 1) return q.mul_term(p.terms_[0].mono, p.terms_[0].coef);
  std::vector<Term> prod;
  prod.reserve(p.terms_.size() * q.terms_.size());
  for (const auto& a : p.terms_)
    for (const auto& b : q.terms_) prod.push_back({a.mono * b.mono, a.coef * b.coef});
  return Polynomial::from_terms(p.n_, std::move(prod));
}

Polynomial& Polynomial::operator*=(const Polynomial& q) { return *this = *this * q; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coef *= c;
  return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.n_ != b.n_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coef != b.terms_[i].coef) return false;
  return true;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& c) const {
  if (m.size() != n_) throw dimension_error("mul_term: monomial size mismatch");
  Polynomial r(n_);
  if (sgn(c) == 0) return r;
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the degrevlex order.
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coef * c});
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(n_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t i) const {
  if (i >= n_) throw dimension_error("derivative: variable index out of range");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const unsigned e = t.mono[i];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(i, e - 1);
    out.push_back({m, t.coef * e});
  }
  return from_terms(n_, std::move(out));
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  Polynomial r(*this);
  const Rational inv = 1 / terms_.front().coef;
  r *= inv;
  return r;
}

Rational Polynomial::evaluate_at_origin() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
  return 0;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != n_) throw dimension_error("evaluate: point dimension mismatch");
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coef;
    for (std::size_t i = 0; i < n_; ++i)
      for (unsigned e = 0; e < t.mono[i]; ++e) v *= point[i];
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if (images.size() != n_) throw dimension_error("substitute: wrong number of images");
  const std::size_t m = images.empty() ? 0 : images[0].ring_dim();
  for (const auto& im : images)
    if (im.ring_dim() != m) throw dimension_error("substitute: images in different rings");
  // Cache powers of each image.
  std::vector<std::vector<Polynomial>> powers(n_);
  Polynomial out(m);
  for (const auto& t : terms_) {
    Polynomial v = constant(m, t.coef);
    for (std::size_t i = 0; i < n_; ++i) {
      const unsigned e = t.mono[i];
      if (e == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant(m, 1));
      while (pw.size() <= e) pw.push_back(pw.back() * images[i]);
      v *= pw[e];
    }
    out += v;
  }
  return out;
}

Polynomial Polynomial::remap(std::size_t new_n, std::span<const std::size_t> map) const {
  if (map.size() != n_) throw dimension_error("remap: map size mismatch");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.mono.remap(new_n, map), t.coef});
  return from_terms(new_n, std::move(out));
}

std::optional<int> Polynomial::homogeneous_degree(std::span<const int> weights) const {
  if (terms_.empty()) return std::nullopt;
  const int d = terms_.front().mono.weighted_degree(weights);
  for (const auto& t : terms_)
    if (t.mono.weighted_degree(weights) != d) return std::nullopt;
  return d;
}

bool Polynomial::is_homogeneous(std::span<const int> weights) const {
  return terms_.empty() || homogeneous_degree(weights).has_value();
}

std::vector<std::pair<int, Polynomial>> Polynomial::homogeneous_components() const {
  std::vector<std::pair<int, Polynomial>> out;
  // Terms are sorted by descending degree, so components are contiguous.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const int d = it->mono.degree();
    if (out.empty() || out.back().first != d) out.emplace_back(d, Polynomial(n_));
    out.back().second.terms_.insert(out.back().second.terms_.begin(), *it);
  }
  return out;
}

std::string Polynomial::to_string() const { return to_string(default_variable_names(n_)); }

std::string Polynomial::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coef;
    if (sgn(c) < 0) {
      os << (first ? "-" : " - ");
      c = -c;
    } else if (!first) {
      os << " + ";
    }
    first = false;
    const bool unit = (c == 1);
    bool wrote = false;
    if (!unit || t.mono.is_one()) {
      os << c.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      const unsigned e = t.mono[i];
      if (e == 0) continue;
      if (wrote) os << '*';
      os << names[i];
      if (e > 1) os << '^' << e;
      wrote = true;
    }
  }
  return os.str();
}

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

std::optional<Polynomial> divide_exact(const Polynomial& g, const Polynomial& h) {
  if (g.ring_dim() != h.ring_dim()) throw dimension_error("divide_exact: ring mismatch");
  if (h.is_zero()) throw std::invalid_argument("divide_exact: division by zero");
  const std::size_t n = g.ring_dim();
  const Term& lt = h.leading();
  std::vector<Term> quot;
  Polynomial r = g;
  while (!r.is_zero()) {
    const Term& t = r.leading();
    if (!lt.mono.divides(t.mono)) return std::nullopt;
    Monomial m = lt.mono.quotient_of(t.mono);
    Rational c = t.coef / lt.coef;
    r -= h.mul_term(m, c);
    quot.push_back({m, c});
  }
  return Polynomial::from_terms(n, std::move(quot));
}

Polynomial remainder(const Polynomial& g, const Polynomial& h) {
  if (g.ring_dim() != h.ring_dim()) throw dimension_error("remainder: ring mismatch");
  if (h.is_zero()) throw std::invalid_argument("remainder: division by zero");
  const Term& lt = h.leading();
  std::vector<Term> rem;
  Polynomial r = g;
  while (!r.is_zero()) {
    const Term t = r.leading();
    if (lt.mono.divides(t.mono)) {
      r -= h.mul_term(lt.mono.quotient_of(t.mono), t.coef / lt.coef);
    } else {
      rem.push_back(t);
      r -= Polynomial::monomial(t.mono, t.coef);
    }
  }
  return Polynomial::from_terms(g.ring_dim(), std::move(rem));
}

std::vector<std::string> default_variable_names(std::size_t n) {
  static const char* short_names[] = {"x", "y", "z", "w"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(n <= 4 ? std::string(short_names[i]) : "x" + std::to_string(i + 1));
  return out;
}

// ---------------------------------------------------------------- parsing

namespace {

struct PolyAlgebra {
  using Value = Polynomial;
  std::size_t n;
  Value constant(const Rational& c) const { return Polynomial::constant(n, c); }
  Value variable(std::size_t i) const { return Polynomial::variable(n, i); }
  Value derivation(std::size_t, const detail::Token& t) const {
    throw parse_error("derivation '" + t.text + "' not allowed in a polynomial", t.line, t.column);
  }
  std::optional<Rational> as_constant(const Value& v) const {
    if (!v.is_constant()) return std::nullopt;
    return v.evaluate_at_origin();
  }
};

}  // namespace

std::size_t infer_ring_dim(std::string_view text) { return detail::referenced_dim(detail::tokenize(text)); }

Polynomial parse_polynomial(std::string_view text, std::size_t n) {
  const auto toks = detail::tokenize(text);
  const std::size_t used = detail::referenced_dim(toks);
  if (n == 0) n = std::max<std::size_t>(used, 1);
  if (used > n) throw dimension_error("polynomial uses " + std::to_string(used) + " variables, ring has " + std::to_string(n));
  if (n > kMaxVars) throw dimension_error("too many variables");
  PolyAlgebra alg{n};
  return detail::Parser<PolyAlgebra>(toks, alg).parse();
}

Polynomial parse_polynomial(std::string_view text, std::span<const std::string> names) {
  if (names.empty()) throw dimension_error("no variable names given");
  if (names.size() > kMaxVars) throw dimension_error("too many variables");
  const auto toks = detail::tokenize(text);
  detail::referenced_dim(toks, names);
  PolyAlgebra alg{names.size()};
  return detail::Parser<PolyAlgebra>(toks, alg, names).parse();
}

// ---------------------------------------------------------------- weights

std::optional<std::vector<int>> quasi_homogeneous_weights(const Polynomial& p) {
  const std::size_t n = p.ring_dim();
  if (p.is_zero() || p.is_constant()) return std::nullopt;
  if (p.is_homogeneous()) return std::vector<int>(n, 1);

  // Solve sum_i a_i w_i = 1 for every exponent a of p, with w_i > 0.
  Matrix a(0, n);
  std::vector<Rational> rhs;
  for (const auto& t : p.terms()) {
    std::vector<Rational> row(n);
    for (std::size_t i = 0; i < n; ++i) row[i] = t.mono[i];
    a.append_row(row);
    rhs.push_back(1);
  }
  auto base = solve(a, rhs);
  if (!base) return std::nullopt;
  Matrix null = kernel(a);

  // Variables absent from p get weight equal to the smallest positive weight used;
  // free directions are tried with a few small offsets.
  auto try_point = [&](const std::vector<Rational>& w) -> std::optional<std::vector<int>> {
    for (const auto& v : w)
      if (sgn(v) <= 0) return std::nullopt;
    mpz_class l = 1;
    for (const auto& v : w) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    std::vector<int> out;
    mpz_class g = 0;
    std::vector<mpz_class> ints;
    for (const auto& v : w) {
      mpz_class z = v.get_num() * (l / v.get_den());
      ints.push_back(z);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    }
    for (auto& z : ints) {
      z /= g;
      if (!z.fits_sint_p()) return std::nullopt;
      out.push_back(static_cast<int>(z.get_si()));
    }
    return out;
  };

  if (auto w = try_point(*base)) return w;
  const Rational offsets[] = {Rational(1, 2), Rational(1), Rational(1, 4), Rational(2), Rational(1, 8)};
  for (const auto& t : offsets) {
    std::vector<Rational> w = *base;
    for (std::size_t r = 0; r < null.rows(); ++r)
      for (std::size_t i = 0; i < n; ++i) w[i] += t * null(r, i);
    if (auto ok = try_point(w)) return ok;
  }
  return std::nullopt;
}

}  // namespace logdiv
