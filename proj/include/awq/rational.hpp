#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace awq {

/// Thrown when an exact integer computation leaves the int64 range.
struct OverflowError : std::runtime_error {
  explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline std::int64_t narrow128(__int128 v, const char* ctx) {
  if (v > INT64_MAX || v < INT64_MIN) throw OverflowError(std::string("integer overflow in ") + ctx);
  return static_cast<std::int64_t>(v);
}

}  // namespace detail

/// Exact rational with int64 numerator/denominator, always normalized
/// (gcd 1, denominator positive). Intermediate products go through
/// __int128 and throw OverflowError instead of wrapping.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n), den_(1) {}
  Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    normalize();
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  bool is_integer() const { return den_ == 1; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  friend Rational operator-(const Rational& x) { return Rational(-x.num_, x.den_, raw{}); }

  friend Rational operator+(const Rational& x, const Rational& y) {
    __int128 n = (__int128)x.num_ * y.den_ + (__int128)y.num_ * x.den_;
    __int128 d = (__int128)x.den_ * y.den_;
    return make(n, d, "rational add");
  }
  friend Rational operator-(const Rational& x, const Rational& y) { return x + (-y); }
  friend Rational operator*(const Rational& x, const Rational& y) {
    __int128 n = (__int128)x.num_ * y.num_;
    __int128 d = (__int128)x.den_ * y.den_;
    return make(n, d, "rational mul");
  }
  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.num_ == 0) throw std::domain_error("rational division by zero");
    __int128 n = (__int128)x.num_ * y.den_;
    __int128 d = (__int128)x.den_ * y.num_;
    return make(n, d, "rational div");
  }

  Rational& operator+=(const Rational& y) { return *this = *this + y; }
  Rational& operator-=(const Rational& y) { return *this = *this - y; }
  Rational& operator*=(const Rational& y) { return *this = *this * y; }
  Rational& operator/=(const Rational& y) { return *this = *this / y; }

  friend bool operator==(const Rational& x, const Rational& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend bool operator!=(const Rational& x, const Rational& y) { return !(x == y); }
  friend bool operator<(const Rational& x, const Rational& y) {
    return (__int128)x.num_ * y.den_ < (__int128)y.num_ * x.den_;
  }

  /// "3", "-3", or "3/4".
  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

 private:
  struct raw {};
  Rational(std::int64_t n, std::int64_t d, raw) : num_(n), den_(d) {}

  static Rational make(__int128 n, __int128 d, const char* ctx) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    __int128 a = n < 0 ? -n : n;
    __int128 g = gcd128(a, d);
    if (g > 1) { n /= g; d /= g; }
    return Rational(detail::narrow128(n, ctx), detail::narrow128(d, ctx), raw{});
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) { __int128 t = a % b; a = b; b = t; }
    return a;
  }

  void normalize() {
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Gaussian rational a + b*i.
struct CRational {
  Rational re, im;

  CRational() = default;
  CRational(Rational r) : re(r) {}
  CRational(Rational r, Rational i) : re(r), im(i) {}
  CRational(std::int64_t r) : re(r) {}

  static CRational i() { return CRational(Rational(0), Rational(1)); }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  CRational conj() const { return CRational(re, -im); }

  friend CRational operator-(const CRational& x) { return CRational(-x.re, -x.im); }
  friend CRational operator+(const CRational& x, const CRational& y) {
    return CRational(x.re + y.re, x.im + y.im);
  }
  friend CRational operator-(const CRational& x, const CRational& y) {
    return CRational(x.re - y.re, x.im - y.im);
  }
  friend CRational operator*(const CRational& x, const CRational& y) {
    return CRational(x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re);
  }
  friend CRational operator*(const CRational& x, const Rational& y) {
    return CRational(x.re * y, x.im * y);
  }
  friend CRational operator/(const CRational& x, const Rational& y) {
    return CRational(x.re / y, x.im / y);
  }
  CRational& operator+=(const CRational& y) { return *this = *this + y; }
  CRational& operator-=(const CRational& y) { return *this = *this - y; }
  CRational& operator*=(const CRational& y) { return *this = *this * y; }

  friend bool operator==(const CRational& x, const CRational& y) {
    return x.re == y.re && x.im == y.im;
  }
  friend bool operator!=(const CRational& x, const CRational& y) { return !(x == y); }
};

/// Binomial coefficient as an exact rational (throws on int64 overflow).
inline Rational binomial(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  Rational r(1);
  for (int j = 1; j <= k; ++j) r = r * Rational(n - k + j) / Rational(j);
  return r;
}

/// k! as an exact rational.
inline Rational factorial_rat(int k) {
  Rational r(1);
  for (int j = 2; j <= k; ++j) r *= Rational(j);
  return r;
}

}  // namespace awq
