#include "awq/print.hpp"

#include "awq/ladder.hpp"

namespace awq {

namespace {

struct Rendered {
  std::string text;  // without leading sign
  bool negative = false;
};

std::string rat_str(const Rational& q) { return q.str(); }

// One monomial q * s^k as grammar factors; k = 2m + r splits into
// hbar^m (or /hbar^-m) and an optional sqrt(2*hbar). Rational
// denominators trail the symbolic factors: "hbar/2", "sqrt(2*hbar)/2".
Rendered render_monomial(int k, const CRational& q) {
  int m = (k >= 0) ? k / 2 : -((-k + 1) / 2);
  int r = k - 2 * m;  // 0 or 1
  Rational two_m(1);
  for (int j = 0; j < (m > 0 ? m : -m); ++j) two_m = (m > 0) ? two_m * Rational(2) : two_m / Rational(2);
  CRational kappa = q * two_m;

  Rendered out;
  std::vector<std::string> numer, denom;

  std::string num_txt;
  if (kappa.is_real()) {
    Rational v = kappa.re;
    if (v < Rational(0)) {
      out.negative = true;
      v = -v;
    }
    if (v.num() != 1) num_txt = std::to_string(v.num());
    if (v.den() != 1) denom.push_back(std::to_string(v.den()));
  } else if (kappa.re.is_zero()) {
    Rational v = kappa.im;
    if (v < Rational(0)) {
      out.negative = true;
      v = -v;
    }
    num_txt = (v.num() == 1) ? "i" : std::to_string(v.num()) + "*i";
    if (v.den() != 1) denom.push_back(std::to_string(v.den()));
  } else {
    std::string re = rat_str(kappa.re);
    Rational im = kappa.im;
    std::string ims = (im < Rational(0)) ? " - " : " + ";
    Rational ia = (im < Rational(0)) ? -im : im;
    num_txt = "(" + re + ims + (ia.is_one() ? "i" : rat_str(ia) + "*i") + ")";
  }
  if (!num_txt.empty()) numer.push_back(num_txt);
  if (m > 0) numer.push_back(m == 1 ? "hbar" : "hbar^" + std::to_string(m));
  if (m < 0) denom.push_back(m == -1 ? "hbar" : "hbar^" + std::to_string(-m));
  if (r == 1) numer.push_back("sqrt(2*hbar)");

  std::string s;
  for (size_t i = 0; i < numer.size(); ++i) s += (i ? "*" : "") + numer[i];
  if (s.empty()) s = "1";
  for (const auto& d : denom) s += "/" + d;
  out.text = s;
  return out;
}

// A full coefficient times an optional variable part.
Rendered render_term(const Coefficient& c, const std::string& vars) {
  Rendered out;
  if (c.terms().size() == 1) {
    const auto& [k, q] = *c.terms().begin();
    out = render_monomial(k, q);
    if (!vars.empty()) {
      if (out.text == "1")
        out.text = vars;
      else
        out.text += "*" + vars;
    }
    return out;
  }
  // Composite coefficient: parenthesized sum, signs kept inside.
  std::string s = "(";
  bool first = true;
  for (const auto& [k, q] : c.terms()) {
    Rendered r = render_monomial(k, q);
    if (first) {
      s += (r.negative ? "-" : "") + r.text;
      first = false;
    } else {
      s += (r.negative ? " - " : " + ") + r.text;
    }
  }
  s += ")";
  out.text = vars.empty() ? s : s + "*" + vars;
  return out;
}

std::string join_terms(const std::vector<Rendered>& terms) {
  if (terms.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < terms.size(); ++i) {
    if (i == 0)
      s += (terms[i].negative ? "-" : "") + terms[i].text;
    else
      s += (terms[i].negative ? " - " : " + ") + terms[i].text;
  }
  return s;
}

std::string var_string(const Exponents& e, int modes, const char* name0, const char* name1) {
  std::string v;
  for (int m = 0; m < modes; ++m) {
    for (int slot = 0; slot < 2; ++slot) {
      int exp = e[2 * m + slot];
      if (exp == 0) continue;
      if (!v.empty()) v += "*";
      v += (slot == 0 ? name0 : name1);
      if (modes > 1) v += std::to_string(m + 1);
      if (exp > 1) v += "^" + std::to_string(exp);
    }
  }
  return v;
}

std::string print_term_map(const TermMap& terms, int modes, const char* name0,
                           const char* name1) {
  std::vector<Rendered> out;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it)
    out.push_back(render_term(it->second, var_string(it->first, modes, name0, name1)));
  return join_terms(out);
}

}  // namespace

std::string print_symbol(const PhaseSymbol& f, VariableConvention convention) {
  switch (convention) {
    case VariableConvention::Xp:
      return print_term_map(to_xp_terms(f), f.modes(), "x", "p");
    case VariableConvention::Alpha:
      return print_term_map(f.terms(), f.modes(), "a", "abar");
    case VariableConvention::PaperZ:
      // alpha = conj(z): the alpha slot prints as zbar, the conj slot as z.
      return print_term_map(f.terms(), f.modes(), "zbar", "z");
  }
  return "0";
}

std::string print_ladder(const LadderExpr& e) {
  return print_term_map(e.terms(), e.modes(), "ad", "a");
}

std::string print_coefficient(const Coefficient& c) {
  if (c.is_zero()) return "0";
  Rendered r = render_term(c, "");
  return (r.negative ? "-" : "") + r.text;
}

}  // namespace awq
