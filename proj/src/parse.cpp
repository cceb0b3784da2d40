#include "awq/parse.hpp"

#include <cctype>
#include <cmath>
#include <optional>
#include <vector>

namespace awq {

std::string to_string(VariableConvention c) {
  switch (c) {
    case VariableConvention::Xp: return "xp";
    case VariableConvention::Alpha: return "alpha";
    case VariableConvention::PaperZ: return "paperz";
  }
  return "xp";
}

VariableConvention convention_from_string(const std::string& s) {
  if (s == "xp") return VariableConvention::Xp;
  if (s == "alpha") return VariableConvention::Alpha;
  if (s == "paperz") return VariableConvention::PaperZ;
  throw std::invalid_argument("unknown variable convention: " + s);
}

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  size_t pos;
  std::string text;   // Ident letters
  Rational value;     // Number
  int index = 0;      // Ident numeric suffix, 0 if absent
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
    size_t pos = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::int64_t ip = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        ip = ip * 10 + (s[i] - '0');
        if (ip < 0) throw ParseError("number literal too large", pos);
        ++i;
      }
      Rational v(ip);
      if (i < s.size() && s[i] == '.') {
        ++i;
        std::int64_t frac = 0, scale = 1;
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
          throw ParseError("digits expected after decimal point", i);
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
          frac = frac * 10 + (s[i] - '0');
          scale *= 10;
          if (frac < 0 || scale < 0) throw ParseError("number literal too large", pos);
          ++i;
        }
        v = v + Rational(frac, scale);
      }
      out.push_back({Tok::Number, pos, "", v, 0});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name;
      while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) name += s[i++];
      int index = 0;
      if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        index = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
          index = index * 10 + (s[i] - '0');
          if (index > 1000000) throw ParseError("variable index too large", pos);
          ++i;
        }
        if (index == 0) throw ParseError("variable index must be positive", pos);
      }
      out.push_back({Tok::Ident, pos, name, Rational(0), index});
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '/': k = Tok::Slash; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }
    out.push_back({k, pos, "", Rational(0), 0});
    ++i;
  }
  out.push_back({Tok::End, s.size(), "", Rational(0), 0});
  return out;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q.num() < 0) return std::nullopt;
  auto isqrt = [](std::int64_t v) -> std::optional<std::int64_t> {
    auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(v))));
    for (std::int64_t c = std::max<std::int64_t>(0, r - 1); c <= r + 1; ++c)
      if (c * c == v) return c;
    return std::nullopt;
  };
  auto n = isqrt(q.num());
  auto d = isqrt(q.den());
  if (!n || !d) return std::nullopt;
  return Rational(*n, *d);
}

class Parser {
 public:
  Parser(const std::string& text, int modes, VariableConvention conv, int cap)
      : toks_(tokenize(text)), modes_(modes), conv_(conv), cap_(cap) {}

  PhaseSymbol run() {
    PhaseSymbol f = expr();
    expect(Tok::End, "end of input");
    for (int m = 0; m < modes_; ++m)
      if (f.degree(m) > cap_)
        throw DegreeCapError("expression exceeds the per-mode degree cap of " +
                             std::to_string(cap_));
    return f;
  }

 private:
  const Token& peek() const { return toks_[at_]; }
  Token next() { return toks_[at_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++at_;
    return true;
  }
  void expect(Tok k, const char* what) {
    if (!accept(k)) throw ParseError(std::string("expected ") + what, peek().pos);
  }

  PhaseSymbol expr() {
    bool neg = accept(Tok::Minus);
    PhaseSymbol f = term();
    if (neg) f = -f;
    for (;;) {
      if (accept(Tok::Plus))
        f += term();
      else if (accept(Tok::Minus))
        f -= term();
      else
        return f;
    }
  }

  PhaseSymbol term() {
    PhaseSymbol f = factor();
    for (;;) {
      if (accept(Tok::Star)) {
        f *= factor();
      } else if (peek().kind == Tok::Slash) {
        size_t pos = peek().pos;
        ++at_;
        PhaseSymbol d = factor();
        f = divide(f, d, pos);
      } else {
        return f;
      }
    }
  }

  static PhaseSymbol divide(const PhaseSymbol& f, const PhaseSymbol& d, size_t pos) {
    if (d.is_zero()) throw ParseError("division by zero", pos);
    if (d.terms().size() != 1)
      throw ParseError("division is only supported by exact constant factors", pos);
    const auto& [e, c] = *d.terms().begin();
    for (int v : e)
      if (v != 0) throw ParseError("division is only supported by exact constant factors", pos);
    if (!c.is_monomial())
      throw ParseError("divisor is not exactly invertible in the coefficient ring", pos);
    Coefficient inv = Coefficient::one() / c;
    return inv * f;
  }

  PhaseSymbol factor() {
    PhaseSymbol b = base();
    if (accept(Tok::Caret)) {
      const Token t = peek();
      if (t.kind != Tok::Number || !t.value.is_integer() || t.value.num() <= 0)
        throw ParseError("exponent must be a positive integer", t.pos);
      ++at_;
      std::int64_t n = t.value.num();
      if (n > cap_)
        throw DegreeCapError("exponent " + std::to_string(n) +
                             " exceeds the per-mode degree cap of " + std::to_string(cap_));
      b = b.pow(static_cast<int>(n));
    }
    return b;
  }

  PhaseSymbol base() {
    const Token t = next();
    switch (t.kind) {
      case Tok::Number:
        return PhaseSymbol::constant(modes_, Coefficient(t.value));
      case Tok::LParen: {
        PhaseSymbol f = expr();
        expect(Tok::RParen, "')'");
        return f;
      }
      case Tok::Ident:
        return ident(t);
      default:
        throw ParseError("expected a number, variable or '('", t.pos);
    }
  }

  PhaseSymbol ident(const Token& t) {
    if (t.text == "sqrt" && t.index == 0) {
      expect(Tok::LParen, "'(' after sqrt");
      PhaseSymbol inner = expr();
      expect(Tok::RParen, "')'");
      return sqrt_of(inner, t.pos);
    }
    if (t.text == "hbar" && t.index == 0) return PhaseSymbol::constant(modes_, Coefficient::hbar());
    if (t.text == "i" && t.index == 0) return PhaseSymbol::constant(modes_, Coefficient::i());
    const int mode = (t.index == 0 ? 1 : t.index) - 1;
    if (mode >= modes_)
      throw ParseError("variable index exceeds the mode count of " + std::to_string(modes_),
                       t.pos);
    if (conv_ == VariableConvention::Xp) {
      if (t.text == "x") return PhaseSymbol::x(modes_, mode);
      if (t.text == "p") return PhaseSymbol::p(modes_, mode);
    } else if (conv_ == VariableConvention::Alpha) {
      if (t.text == "a") return PhaseSymbol::alpha(modes_, mode, false);
      if (t.text == "abar") return PhaseSymbol::alpha(modes_, mode, true);
    } else {
      if (t.text == "z") return PhaseSymbol::alpha(modes_, mode, true);
      if (t.text == "zbar") return PhaseSymbol::alpha(modes_, mode, false);
    }
    throw ParseError("unknown variable '" + t.text + "' under the " + to_string(conv_) +
                         " convention",
                     t.pos);
  }

  /// Exact square root of a constant: q^2 * hbar^2m or q^2 * (2 hbar)^(2m+1).
  PhaseSymbol sqrt_of(const PhaseSymbol& f, size_t pos) {
    if (f.is_zero()) return f;
    if (f.terms().size() != 1)
      throw ParseError("sqrt argument must be an exact constant square", pos);
    const auto& [e, c] = *f.terms().begin();
    for (int v : e)
      if (v != 0) throw ParseError("sqrt argument must be an exact constant square", pos);
    if (!c.is_monomial() || !c.is_real())
      throw ParseError("sqrt argument is not exactly representable", pos);
    const auto& [k, q] = *c.terms().begin();
    if (k % 2 != 0) throw ParseError("sqrt argument is not exactly representable", pos);
    auto root = rational_sqrt(q.re);
    if (!root) throw ParseError("sqrt argument is not exactly representable", pos);
    return PhaseSymbol::constant(modes_, Coefficient::monomial(CRational(*root), k / 2));
  }

  std::vector<Token> toks_;
  size_t at_ = 0;
  int modes_;
  VariableConvention conv_;
  int cap_;
};

}  // namespace

PhaseSymbol parse_symbol(const std::string& text, int mode_count, VariableConvention convention,
                         int degree_cap) {
  if (mode_count < 1) throw std::invalid_argument("mode count must be positive");
  return Parser(text, mode_count, convention, degree_cap).run();
}

int scan_mode_count(const std::string& text) {
  int modes = 1;
  for (const auto& t : tokenize(text))
    if (t.kind == Tok::Ident && t.index > modes && t.text != "hbar" && t.text != "sqrt")
      modes = t.index;
  return modes;
}

}  // namespace awq
