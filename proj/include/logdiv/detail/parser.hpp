#pragma once

// Recursive-descent parser shared by the polynomial and operator grammars.
//
//   expr    := ['+'|'-'] product (('+'|'-') product)*
//   product := power (['*'|'/'] power | power)*     juxtaposition multiplies
//   power   := atom ['^' integer]
//   atom    := number | identifier | '(' expr ')' | ('+'|'-') power
//
// Identifiers: x,y,z,w, x1..xN for variables and dx,dy,dz,dw, dx1..dxN for
// derivations. Division is allowed only by nonzero constants.

#include <cctype>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "logdiv/poly.hpp"

namespace logdiv::detail {

struct Identifier {
  bool derivation = false;
  std::size_t index = 0;
};

inline std::optional<Identifier> resolve_identifier(std::string_view name) {
  Identifier id;
  if (name.size() >= 2 && name[0] == 'd' && name[1] != 'd') {
    id.derivation = true;
    name.remove_prefix(1);
  }
  if (name.empty()) return std::nullopt;
  if (name.size() == 1) {
    switch (name[0]) {
      case 'x': id.index = 0; return id;
      case 'y': id.index = 1; return id;
      case 'z': id.index = 2; return id;
      case 'w': id.index = 3; return id;
      default: return std::nullopt;
    }
  }
  if (name[0] != 'x') return std::nullopt;
  std::size_t v = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
    v = v * 10 + static_cast<std::size_t>(name[i] - '0');
    if (v > 1000) return std::nullopt;
  }
  if (v == 0) return std::nullopt;
  id.index = v - 1;
  return id;
}

enum class TokKind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  TokKind kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

inline std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const std::size_t l0 = line, c0 = col;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({TokKind::Number, std::string(s.substr(i, j - i)), l0, c0});
      advance(j - i);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({TokKind::Ident, std::string(s.substr(i, j - i)), l0, c0});
      advance(j - i);
      continue;
    }
    TokKind k;
    switch (c) {
      case '+': k = TokKind::Plus; break;
      case '-': k = TokKind::Minus; break;
      case '*': k = TokKind::Star; break;
      case '/': k = TokKind::Slash; break;
      case '^': k = TokKind::Caret; break;
      case '(': k = TokKind::LParen; break;
      case ')': k = TokKind::RParen; break;
      default:
        throw parse_error(std::string("unexpected character '") + c + "'", l0, c0);
    }
    out.push_back({k, std::string(1, c), l0, c0});
    advance(1);
  }
  out.push_back({TokKind::End, "", line, col});
  return out;
}

/// Position of `name` in a custom variable list.
inline std::optional<Identifier> resolve_identifier(std::string_view name, std::span<const std::string> names) {
  if (names.empty()) return resolve_identifier(name);
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return Identifier{false, i};
  return std::nullopt;
}

/// Highest variable/derivation index + 1 referenced by the tokens.
inline std::size_t referenced_dim(const std::vector<Token>& toks, std::span<const std::string> names = {}) {
  std::size_t n = 0;
  for (const auto& t : toks) {
    if (t.kind != TokKind::Ident) continue;
    auto id = resolve_identifier(t.text, names);
    if (!id) throw parse_error("unknown identifier '" + t.text + "'", t.line, t.column);
    n = std::max(n, id->index + 1);
  }
  return n;
}

/// `Algebra` supplies: Value constant(const Rational&), Value variable(size_t),
/// Value derivation(size_t), std::optional<Rational> as_constant(const Value&),
/// plus Value arithmetic via +, -, *, unary -.
template <class Algebra>
class Parser {
 public:
  using Value = typename Algebra::Value;

  Parser(const std::vector<Token>& toks, const Algebra& alg, std::span<const std::string> names = {})
      : toks_(toks), alg_(alg), names_(names) {}

  Value parse() {
    Value v = expr();
    if (peek().kind != TokKind::End) fail("unexpected '" + peek().text + "'");
    return v;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw parse_error(msg, peek().line, peek().column);
  }

  static bool starts_atom(TokKind k) {
    return k == TokKind::Number || k == TokKind::Ident || k == TokKind::LParen;
  }

  Value expr() {
    Value acc = product();
    while (peek().kind == TokKind::Plus || peek().kind == TokKind::Minus) {
      const bool minus = take().kind == TokKind::Minus;
      Value rhs = product();
      acc = minus ? acc - rhs : acc + rhs;
    }
    return acc;
  }

  Value product() {
    Value acc = power();
    for (;;) {
      const TokKind k = peek().kind;
      if (k == TokKind::Star) {
        take();
        acc = acc * power();
      } else if (k == TokKind::Slash) {
        const Token& at = take();
        Value rhs = power();
        auto c = alg_.as_constant(rhs);
        if (!c || sgn(*c) == 0)
          throw parse_error("division only by nonzero constants", at.line, at.column);
        acc = acc * alg_.constant(1 / *c);
      } else if (starts_atom(k)) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  Value power() {
    Value base = atom();
    if (peek().kind == TokKind::Caret) {
      take();
      if (peek().kind != TokKind::Number) fail("expected integer exponent");
      const Token& t = take();
      if (t.text.size() > 4) throw parse_error("exponent too large", t.line, t.column);
      const unsigned e = static_cast<unsigned>(std::stoul(t.text));
      Value r = alg_.constant(1);
      for (unsigned i = 0; i < e; ++i) r = r * base;
      return r;
    }
    return base;
  }

  Value atom() {
    const Token& t = peek();
    switch (t.kind) {
      case TokKind::Number: {
        take();
        return alg_.constant(Rational(mpz_class(t.text)));
      }
      case TokKind::Ident: {
        take();
        auto id = resolve_identifier(t.text, names_);
        if (!id) throw parse_error("unknown identifier '" + t.text + "'", t.line, t.column);
        if (id->derivation) return alg_.derivation(id->index, t);
        return alg_.variable(id->index);
      }
      case TokKind::LParen: {
        take();
        Value v = expr();
        if (peek().kind != TokKind::RParen) fail("expected ')'");
        take();
        return v;
      }
      case TokKind::Minus:
        take();
        return -power();
      case TokKind::Plus:
        take();
        return power();
      case TokKind::End:
        fail("unexpected end of input");
      default:
        fail("unexpected '" + t.text + "'");
    }
  }

  const std::vector<Token>& toks_;
  const Algebra& alg_;
  std::span<const std::string> names_;
  std::size_t pos_ = 0;
};

}  // namespace logdiv::detail
