#include "awq/symbol.hpp"

#include <cmath>

namespace awq {

namespace {

Exponents zero_key(int modes) { return Exponents(2 * modes, 0); }

TermMap mul_maps(const TermMap& a, const TermMap& b) {
  TermMap out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exponents e = ea;
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      Coefficient c = ca * cb;
      if (c.is_zero()) continue;
      auto it = out.find(e);
      if (it == out.end())
        out.emplace(std::move(e), std::move(c));
      else {
        it->second += c;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  return out;
}

TermMap pow_map(const TermMap& base, int n, int modes) {
  TermMap acc;
  acc.emplace(zero_key(modes), Coefficient::one());
  for (int i = 0; i < n; ++i) acc = mul_maps(acc, base);
  return acc;
}

}  // namespace

PhaseSymbol PhaseSymbol::constant(int modes, const Coefficient& c) {
  PhaseSymbol f(modes);
  f.add_term(zero_key(modes), c);
  return f;
}

PhaseSymbol PhaseSymbol::alpha(int modes, int mode, bool conjugated) {
  PhaseSymbol f(modes);
  Exponents e = zero_key(modes);
  e[2 * mode + (conjugated ? 1 : 0)] = 1;
  f.add_term(e, Coefficient::one());
  return f;
}

PhaseSymbol PhaseSymbol::x(int modes, int mode) {
  // x = (s/2)(a + ac), s = sqrt(2 hbar)
  Coefficient half_s = Coefficient::monomial(CRational(Rational(1, 2)), 1);
  return half_s * (alpha(modes, mode, false) + alpha(modes, mode, true));
}

PhaseSymbol PhaseSymbol::p(int modes, int mode) {
  // p = -(i s/2)(a - ac)
  Coefficient c = Coefficient::monomial(CRational(Rational(0), Rational(-1, 2)), 1);
  return c * (alpha(modes, mode, false) - alpha(modes, mode, true));
}

void PhaseSymbol::add_term(const Exponents& e, const Coefficient& c) {
  if (static_cast<int>(e.size()) != 2 * modes_)
    throw DimensionError("exponent key does not match mode count");
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

int PhaseSymbol::degree(int mode) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[2 * mode] + e[2 * mode + 1]);
  return d;
}

int PhaseSymbol::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int t = 0;
    for (int v : e) t += v;
    d = std::max(d, t);
  }
  return d;
}

bool PhaseSymbol::is_real() const {
  for (const auto& [e, c] : terms_) {
    Exponents swapped = e;
    for (int m = 0; m < modes_; ++m) std::swap(swapped[2 * m], swapped[2 * m + 1]);
    auto it = terms_.find(swapped);
    if (it == terms_.end()) return false;
    if (it->second != c.conj()) return false;
  }
  return true;
}

PhaseSymbol PhaseSymbol::conjugated() const {
  PhaseSymbol out(modes_);
  for (const auto& [e, c] : terms_) {
    Exponents swapped = e;
    for (int m = 0; m < modes_; ++m) std::swap(swapped[2 * m], swapped[2 * m + 1]);
    out.add_term(swapped, c.conj());
  }
  return out;
}

PhaseSymbol operator-(const PhaseSymbol& f) {
  PhaseSymbol out(f.modes_);
  for (const auto& [e, c] : f.terms_) out.terms_.emplace(e, -c);
  return out;
}

PhaseSymbol operator+(const PhaseSymbol& f, const PhaseSymbol& g) {
  if (f.modes_ != g.modes_) throw DimensionError("mode-count mismatch");
  PhaseSymbol out = f;
  for (const auto& [e, c] : g.terms_) out.add_term(e, c);
  return out;
}

PhaseSymbol operator-(const PhaseSymbol& f, const PhaseSymbol& g) { return f + (-g); }

PhaseSymbol operator*(const PhaseSymbol& f, const PhaseSymbol& g) {
  if (f.modes_ != g.modes_) throw DimensionError("mode-count mismatch");
  PhaseSymbol out(f.modes_);
  out.terms_ = mul_maps(f.terms_, g.terms_);
  return out;
}

PhaseSymbol operator*(const Coefficient& c, const PhaseSymbol& f) {
  PhaseSymbol out(f.modes_);
  for (const auto& [e, fc] : f.terms_) out.add_term(e, c * fc);
  return out;
}

PhaseSymbol PhaseSymbol::pow(int n) const {
  PhaseSymbol out = constant(modes_, Coefficient::one());
  for (int i = 0; i < n; ++i) out *= *this;
  return out;
}

PhaseSymbol PhaseSymbol::derivative(int mode, bool wrt_conjugate) const {
  PhaseSymbol out(modes_);
  const int slot = 2 * mode + (wrt_conjugate ? 1 : 0);
  for (const auto& [e, c] : terms_) {
    if (e[slot] == 0) continue;
    Exponents d = e;
    d[slot] -= 1;
    Coefficient cc = c;
    cc.scale(Rational(e[slot]));
    out.add_term(d, cc);
  }
  return out;
}

double GaussianMeasure::alpha_density(const std::vector<std::complex<double>>& a) const {
  double n2 = 0.0;
  for (const auto& v : a) n2 += std::norm(v);
  return std::exp(-n2) / std::pow(M_PI, static_cast<double>(modes));
}

double GaussianMeasure::z_density(const std::vector<std::complex<double>>& z) const {
  double n2 = 0.0;
  for (const auto& v : z) n2 += std::norm(v);
  return std::exp(-n2 / hbar) / std::pow(M_PI * hbar, static_cast<double>(modes));
}

std::complex<double> evaluate_symbol(const PhaseSymbol& f,
                                     const std::vector<std::complex<double>>& point,
                                     double hbar) {
  if (static_cast<int>(point.size()) != f.modes())
    throw DimensionError("evaluation point does not match mode count");
  std::complex<double> v = 0.0;
  for (const auto& [e, c] : f.terms()) {
    std::complex<double> t = c.evaluate(hbar);
    for (int m = 0; m < f.modes(); ++m) {
      for (int j = 0; j < e[2 * m]; ++j) t *= point[m];
      for (int k = 0; k < e[2 * m + 1]; ++k) t *= std::conj(point[m]);
    }
    v += t;
  }
  return v;
}

PhaseSymbol poisson_bracket(const PhaseSymbol& f, const PhaseSymbol& g) {
  if (f.modes() != g.modes()) throw DimensionError("mode-count mismatch");
  // (i/hbar) sum_m (df/dac dg/da - df/da dg/dac); i/hbar = 2i s^-2.
  PhaseSymbol acc(f.modes());
  for (int m = 0; m < f.modes(); ++m) {
    acc += f.derivative(m, true) * g.derivative(m, false) -
           f.derivative(m, false) * g.derivative(m, true);
  }
  Coefficient i_over_hbar = Coefficient::monomial(CRational(Rational(0), Rational(2)), -2);
  return i_over_hbar * acc;
}

std::complex<double> gaussian_moment_integral(const PhaseSymbol& f, double hbar) {
  std::complex<double> v = 0.0;
  for (const auto& [e, c] : f.terms()) {
    bool diagonal = true;
    double fact = 1.0;
    for (int m = 0; m < f.modes(); ++m) {
      if (e[2 * m] != e[2 * m + 1]) {
        diagonal = false;
        break;
      }
      for (int j = 2; j <= e[2 * m]; ++j) fact *= j;
    }
    if (diagonal) v += c.evaluate(hbar) * fact;
  }
  return v;
}

TermMap to_xp_terms(const PhaseSymbol& f) {
  const int modes = f.modes();
  // alpha = (x + i p)/s, conj(alpha) = (x - i p)/s.
  auto alpha_xp = [&](int mode, bool conjugated) {
    TermMap t;
    Exponents ex = zero_key(modes), ep = zero_key(modes);
    ex[2 * mode] = 1;
    ep[2 * mode + 1] = 1;
    t.emplace(ex, Coefficient::sqrt2hbar(-1));
    Rational im = conjugated ? Rational(-1) : Rational(1);
    t.emplace(ep, Coefficient::monomial(CRational(Rational(0), im), -1));
    return t;
  };
  TermMap out;
  for (const auto& [e, c] : f.terms()) {
    TermMap term;
    term.emplace(zero_key(modes), c);
    for (int m = 0; m < modes; ++m) {
      if (e[2 * m] > 0) term = mul_maps(term, pow_map(alpha_xp(m, false), e[2 * m], modes));
      if (e[2 * m + 1] > 0) term = mul_maps(term, pow_map(alpha_xp(m, true), e[2 * m + 1], modes));
    }
    for (const auto& [ee, cc] : term) {
      auto it = out.find(ee);
      if (it == out.end())
        out.emplace(ee, cc);
      else {
        it->second += cc;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

PhaseSymbol from_xp_terms(int modes, const TermMap& xp) {
  PhaseSymbol out(modes);
  for (const auto& [e, c] : xp) {
    PhaseSymbol term = PhaseSymbol::constant(modes, c);
    for (int m = 0; m < modes; ++m) {
      if (e[2 * m] > 0) term *= PhaseSymbol::x(modes, m).pow(e[2 * m]);
      if (e[2 * m + 1] > 0) term *= PhaseSymbol::p(modes, m).pow(e[2 * m + 1]);
    }
    out += term;
  }
  return out;
}

}  // namespace awq
