#include "logdiv/weyl.hpp"

#include <sstream>
#include <stdexcept>

#include "logdiv/detail/parser.hpp"

namespace logdiv {

WeylOperator WeylOperator::term(const Polynomial& coef, const Monomial& d_exponent) {
  if (coef.ring_dim() != d_exponent.size()) throw dimension_error("WeylOperator::term: size mismatch");
  WeylOperator op(coef.ring_dim());
  op.add_term(d_exponent, coef);
  return op;
}

WeylOperator WeylOperator::multiplication(const Polynomial& p) { return term(p, Monomial(p.ring_dim())); }

WeylOperator WeylOperator::derivation(std::size_t n, std::size_t i) {
  if (i >= n) throw dimension_error("WeylOperator::derivation: index out of range");
  Monomial b(n);
  b.set(i, 1);
  return term(Polynomial::constant(n, 1), b);
}

WeylOperator WeylOperator::vector_field(const FreeModuleVector& v) {
  const std::size_t n = v.ring_dim();
  if (v.rank() != n) throw dimension_error("vector_field: need one coefficient per variable");
  WeylOperator op(n);
  for (std::size_t i = 0; i < n; ++i) {
    Monomial b(n);
    b.set(i, 1);
    op.add_term(b, v[i]);
  }
  return op;
}

void WeylOperator::add_term(const Monomial& d_exponent, const Polynomial& coef) {
  if (coef.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(d_exponent, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int WeylOperator::order() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

Polynomial WeylOperator::coefficient(const Monomial& d_exponent) const {
  auto it = terms_.find(d_exponent);
  return it == terms_.end() ? Polynomial(n_) : it->second;
}

void WeylOperator::check_ring(const WeylOperator& o) const {
  if (n_ != o.n_) throw dimension_error("operator ring mismatch");
}

WeylOperator WeylOperator::operator-() const {
  WeylOperator r(*this);
  for (auto& [b, p] : r.terms_) p = -p;
  return r;
}

WeylOperator& WeylOperator::operator+=(const WeylOperator& o) {
  check_ring(o);
  for (const auto& [b, p] : o.terms_) add_term(b, p);
  return *this;
}

WeylOperator& WeylOperator::operator-=(const WeylOperator& o) {
  check_ring(o);
  for (const auto& [b, p] : o.terms_) add_term(b, -p);
  return *this;
}

namespace {

// d^mu applied to q, via repeated partial derivatives.
Polynomial derive(const Polynomial& q, const Monomial& mu) {
  Polynomial r = q;
  for (std::size_t i = 0; i < mu.size() && !r.is_zero(); ++i)
    for (unsigned k = 0; k < mu[i] && !r.is_zero(); ++k) r = r.derivative(i);
  return r;
}

mpz_class multi_binomial(const Monomial& beta, const Monomial& mu) {
  mpz_class c = 1;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), beta[i], mu[i]);
    c *= b;
  }
  return c;
}

// All mu <= beta componentwise.
std::vector<Monomial> sub_exponents(const Monomial& beta) {
  std::vector<Monomial> out{Monomial(beta.size())};
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const std::size_t k = out.size();
    for (unsigned e = 1; e <= beta[i]; ++e)
      for (std::size_t j = 0; j < k; ++j) {
        Monomial m = out[j];
        m.set(i, e);
        out.push_back(m);
      }
  }
  return out;
}

}  // namespace

WeylOperator operator*(const WeylOperator& a, const WeylOperator& b) {
  a.check_ring(b);
  WeylOperator r(a.n_);
  // p d^beta q d^gamma = sum_{mu <= beta} C(beta,mu) p d^mu(q) d^{beta-mu+gamma}
  for (const auto& [beta, p] : a.terms_) {
    const auto mus = sub_exponents(beta);
    for (const auto& [gamma, q] : b.terms_) {
      for (const auto& mu : mus) {
        Polynomial dq = derive(q, mu);
        if (dq.is_zero()) continue;
        Polynomial coef = p * dq;
        coef *= Rational(multi_binomial(beta, mu));
        r.add_term(mu.quotient_of(beta) * gamma, coef);
      }
    }
  }
  return r;
}

WeylOperator operator*(const Polynomial& p, const WeylOperator& a) {
  if (p.ring_dim() != a.n_) throw dimension_error("operator ring mismatch");
  WeylOperator r(a.n_);
  for (const auto& [b, c] : a.terms_) r.add_term(b, p * c);
  return r;
}

bool operator==(const WeylOperator& a, const WeylOperator& b) {
  if (a.n_ != b.n_ || a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [beta, p] : a.terms_) {
    if (!(beta == it->first) || !(p == it->second)) return false;
    ++it;
  }
  return true;
}

std::optional<int> WeylOperator::weight(std::span<const int> weights) const {
  std::optional<int> w;
  for (const auto& [beta, p] : terms_) {
    auto d = p.homogeneous_degree(weights);
    if (!d) return std::nullopt;
    const int v = *d - beta.weighted_degree(weights);
    if (!w) w = v;
    else if (*w != v) return std::nullopt;
  }
  return w;
}

std::optional<FreeModuleVector> WeylOperator::as_vector_field() const {
  FreeModuleVector v(n_, n_);
  for (const auto& [beta, p] : terms_) {
    if (beta.degree() != 1) return std::nullopt;
    for (std::size_t i = 0; i < n_; ++i)
      if (beta[i]) v[i] = p;
  }
  return v;
}

std::string WeylOperator::to_string() const {
  if (terms_.empty()) return "0";
  const auto xs = default_variable_names(n_);
  std::ostringstream os;
  bool first = true;
  for (const auto& [beta, p] : terms_) {
    std::string dpart;
    for (std::size_t i = 0; i < n_; ++i) {
      if (!beta[i]) continue;
      if (!dpart.empty()) dpart += '*';
      dpart += "d" + xs[i];
      if (beta[i] > 1) dpart += "^" + std::to_string(beta[i]);
    }
    std::string coef;
    bool negative = false;
    if (p.size() == 1) {
      Polynomial c = p;
      if (sgn(c.leading().coef) < 0) {
        negative = true;
        c = -c;
      }
      coef = c.to_string(xs);
    } else {
      coef = "(" + p.to_string(xs) + ")";
    }
    if (first) os << (negative ? "-" : "");
    else os << (negative ? " - " : " + ");
    first = false;
    if (dpart.empty()) os << coef;
    else if (coef == "1") os << dpart;
    else os << coef << '*' << dpart;
  }
  return os.str();
}

Polynomial apply(const WeylOperator& op, const Polynomial& g) {
  if (op.ring_dim() != g.ring_dim()) throw dimension_error("apply: ring mismatch");
  Polynomial r(g.ring_dim());
  for (const auto& [beta, p] : op.terms()) {
    Polynomial dg = derive(g, beta);
    if (!dg.is_zero()) r += p * dg;
  }
  return r;
}

WeylOperator compose(const WeylOperator& p, const WeylOperator& q) { return p * q; }

WeylOperator commutator(const WeylOperator& p, const WeylOperator& q) { return p * q - q * p; }

Polynomial symbol(const WeylOperator& op) {
  if (op.is_zero()) throw std::invalid_argument("symbol: zero operator has no symbol");
  const std::size_t n = op.ring_dim();
  const int d = op.order();
  std::vector<std::size_t> embed(n);
  for (std::size_t i = 0; i < n; ++i) embed[i] = i;
  Polynomial s(2 * n);
  for (const auto& [beta, p] : op.terms()) {
    if (beta.degree() != d) continue;
    Monomial xi(2 * n);
    for (std::size_t i = 0; i < n; ++i) xi.set(n + i, beta[i]);
    s += p.remap(2 * n, embed).mul_term(xi, 1);
  }
  return s;
}

std::vector<std::string> symbol_variable_names(std::size_t n) {
  auto names = default_variable_names(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back("xi" + std::to_string(i + 1));
  return names;
}

namespace {

struct OperatorAlgebra {
  using Value = WeylOperator;
  std::size_t n;
  Value constant(const Rational& c) const { return WeylOperator::multiplication(Polynomial::constant(n, c)); }
  Value variable(std::size_t i) const { return WeylOperator::multiplication(Polynomial::variable(n, i)); }
  Value derivation(std::size_t i, const detail::Token&) const { return WeylOperator::derivation(n, i); }
  std::optional<Rational> as_constant(const Value& v) const {
    if (v.is_zero()) return Rational(0);
    if (v.order() != 0) return std::nullopt;
    const Polynomial c = v.coefficient(Monomial(n));
    if (!c.is_constant()) return std::nullopt;
    return c.evaluate_at_origin();
  }
};

}  // namespace

WeylOperator parse_operator(std::string_view text, std::size_t n) {
  const auto toks = detail::tokenize(text);
  const std::size_t used = detail::referenced_dim(toks);
  if (n == 0) n = std::max<std::size_t>(used, 1);
  if (used > n) throw dimension_error("operator uses " + std::to_string(used) + " variables, ring has " + std::to_string(n));
  OperatorAlgebra alg{n};
  return detail::Parser<OperatorAlgebra>(toks, alg).parse();
}

}  // namespace logdiv
