#pragma once

#include <cmath>
#include <complex>
#include <map>

#include "awq/rational.hpp"

namespace awq {

/// Exact scalar of the symbol/operator algebra: a Laurent polynomial in the
/// formal element s = sqrt(2*hbar) with Gaussian-rational coefficients,
///     c = sum_k  q_k * s^k,   q_k in Q(i),  k in Z.
///
/// hbar itself is s^2/2, so rational multiples of any integer or
/// half-integer power of hbar are representable exactly. The generator is
/// sqrt(2*hbar) rather than sqrt(hbar) because the position/momentum
/// substitution x = sqrt(2*hbar)*Re(alpha) must stay exact for odd powers.
/// hbar is substituted numerically only in evaluate().
class Coefficient {
 public:
  Coefficient() = default;
  Coefficient(std::int64_t n) { set(0, CRational(Rational(n))); }
  Coefficient(const Rational& q) { set(0, CRational(q)); }
  Coefficient(const CRational& q) { set(0, q); }

  /// q * sqrt(2*hbar)^k
  static Coefficient monomial(const CRational& q, int k) {
    Coefficient c;
    c.set(k, q);
    return c;
  }
  static Coefficient one() { return Coefficient(1); }
  static Coefficient i() { return Coefficient(CRational::i()); }
  /// hbar^p  ==  2^-p * s^(2p)
  static Coefficient hbar(int p = 1) {
    Rational q(1);
    for (int j = 0; j < (p > 0 ? p : -p); ++j) q = (p > 0) ? q / Rational(2) : q * Rational(2);
    return monomial(CRational(q), 2 * p);
  }
  /// sqrt(2*hbar)^p
  static Coefficient sqrt2hbar(int p = 1) { return monomial(CRational(Rational(1)), p); }

  bool is_zero() const { return terms_.empty(); }
  bool is_real() const {
    for (const auto& [k, q] : terms_)
      if (!q.is_real()) return false;
    return true;
  }
  /// True when the coefficient is a single power of s (exactly invertible).
  bool is_monomial() const { return terms_.size() == 1; }

  /// Smallest s-exponent present; meaningful only when nonzero.
  int min_s_exponent() const { return terms_.begin()->first; }

  Coefficient conj() const {
    Coefficient r;
    for (const auto& [k, q] : terms_) r.terms_.emplace(k, q.conj());
    return r;
  }

  friend Coefficient operator-(const Coefficient& x) {
    Coefficient r;
    for (const auto& [k, q] : x.terms_) r.terms_.emplace(k, -q);
    return r;
  }
  friend Coefficient operator+(const Coefficient& x, const Coefficient& y) {
    Coefficient r = x;
    for (const auto& [k, q] : y.terms_) r.add(k, q);
    return r;
  }
  friend Coefficient operator-(const Coefficient& x, const Coefficient& y) { return x + (-y); }
  friend Coefficient operator*(const Coefficient& x, const Coefficient& y) {
    Coefficient r;
    for (const auto& [kx, qx] : x.terms_)
      for (const auto& [ky, qy] : y.terms_) r.add(kx + ky, qx * qy);
    return r;
  }
  Coefficient& operator+=(const Coefficient& y) { return *this = *this + y; }
  Coefficient& operator-=(const Coefficient& y) { return *this = *this - y; }
  Coefficient& operator*=(const Coefficient& y) { return *this = *this * y; }

  Coefficient& scale(const Rational& q) {
    Coefficient r;
    for (const auto& [k, c] : terms_) r.add(k, c * q);
    return *this = r;
  }

  /// Exact division; the divisor must be a nonzero s-monomial.
  friend Coefficient operator/(const Coefficient& x, const Coefficient& y) {
    if (y.is_zero()) throw std::domain_error("coefficient division by zero");
    if (!y.is_monomial())
      throw std::domain_error("coefficient division requires a monomial divisor");
    auto [ky, qy] = *y.terms_.begin();
    // 1/(a+bi) = (a-bi)/(a^2+b^2)
    Rational n2 = qy.re * qy.re + qy.im * qy.im;
    CRational inv = qy.conj() / n2;
    Coefficient r;
    for (const auto& [k, q] : x.terms_) r.add(k - ky, q * inv);
    return r;
  }

  friend bool operator==(const Coefficient& x, const Coefficient& y) {
    return x.terms_ == y.terms_;
  }
  friend bool operator!=(const Coefficient& x, const Coefficient& y) { return !(x == y); }

  /// Numeric value with hbar substituted (hbar > 0). Even s-powers are
  /// evaluated as integer powers of 2*hbar so they stay exact when the
  /// factors are; the square root enters only for odd powers.
  std::complex<double> evaluate(double hbar_value) const {
    const double two_h = 2.0 * hbar_value;
    const double root = std::sqrt(two_h);
    std::complex<double> v = 0.0;
    for (const auto& [k, q] : terms_) {
      const int m = (k >= 0) ? k / 2 : -((-k + 1) / 2);
      double sv = std::pow(two_h, m);
      if (k - 2 * m == 1) sv *= root;
      v += std::complex<double>(q.re.to_double(), q.im.to_double()) * sv;
    }
    return v;
  }

  const std::map<int, CRational>& terms() const { return terms_; }

 private:
  void set(int k, const CRational& q) {
    if (!q.is_zero()) terms_[k] = q;
  }
  void add(int k, const CRational& q) {
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      if (!q.is_zero()) terms_.emplace(k, q);
      return;
    }
    it->second += q;
    if (it->second.is_zero()) terms_.erase(it);
  }

  std::map<int, CRational> terms_;  // s-exponent -> Q(i) coefficient
};

}  // namespace awq
