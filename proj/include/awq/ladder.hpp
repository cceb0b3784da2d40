#pragma once

#include <vector>

#include "awq/symbol.hpp"

namespace awq {

/// One letter of a ladder word: creation or annihilation on a mode.
struct LadderLetter {
  int mode = 0;
  bool creation = false;
};

/// A product of ladder letters with an exact coefficient, as written
/// (not yet reordered).
struct LadderWord {
  Coefficient coefficient;
  std::vector<LadderLetter> letters;
};

/// Noncommutative polynomial in ladder operators, stored in normal-ordered
/// canonical form: terms map [m0,n0,m1,n1,...] -> coefficient, one term
/// meaning  c * prod_m (ad_m)^{m_m} (a_m)^{n_m},  under [a, ad] = 1.
/// No zero coefficients are stored.
class LadderExpr {
 public:
  LadderExpr() = default;
  explicit LadderExpr(int modes) : modes_(modes) {}

  static LadderExpr zero(int modes) { return LadderExpr(modes); }
  static LadderExpr identity(int modes);
  /// ad_m or a_m.
  static LadderExpr ladder(int modes, int mode, bool creation);
  /// Position/momentum: X = (s/2)(a + ad), P = (i s/2)(ad - a), s = sqrt(2 hbar).
  static LadderExpr position(int modes, int mode);
  static LadderExpr momentum(int modes, int mode);
  /// Normal-ordered form of  c * a^j (ad)^k  per mode (anti-normal monomial).
  static LadderExpr from_antinormal_monomial(int modes, const Exponents& jk,
                                             const Coefficient& c);

  int modes() const { return modes_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& e, const Coefficient& c);

  /// Max of (m_m + n_m) over the given mode's exponents.
  int degree(int mode) const;

  LadderExpr adjoint() const;
  /// E == adjoint(E), i.e. coeff(m,n) == conj(coeff(n,m)).
  bool is_formally_self_adjoint() const;

  friend LadderExpr operator-(const LadderExpr& e);
  friend LadderExpr operator+(const LadderExpr& x, const LadderExpr& y);
  friend LadderExpr operator-(const LadderExpr& x, const LadderExpr& y);
  /// Noncommutative product, re-normal-ordered exactly.
  friend LadderExpr operator*(const LadderExpr& x, const LadderExpr& y);
  friend LadderExpr operator*(const Coefficient& c, const LadderExpr& e);
  LadderExpr& operator+=(const LadderExpr& y) { return *this = *this + y; }
  LadderExpr& operator-=(const LadderExpr& y) { return *this = *this - y; }
  LadderExpr& operator*=(const LadderExpr& y) { return *this = *this * y; }

  friend bool operator==(const LadderExpr& x, const LadderExpr& y) {
    return x.modes_ == y.modes_ && x.terms_ == y.terms_;
  }
  friend bool operator!=(const LadderExpr& x, const LadderExpr& y) { return !(x == y); }

  LadderExpr pow(int n) const;

 private:
  int modes_ = 1;
  TermMap terms_;
};

/// Canonical normal-ordered form of a sum of ladder words; equal to the
/// input in the algebra generated by [a_j, ad_k] = delta_jk.
LadderExpr normal_order(int modes, const std::vector<LadderWord>& words);

/// Anti-normal coefficients d: E = sum d_jk a^j (ad)^k per mode, exactly.
/// Keys are [j0,k0,...] with j the annihilation and k the creation power.
TermMap antinormal_order_form(const LadderExpr& e);

/// Normal-ordered AB - BA.
LadderExpr commutator(const LadderExpr& a, const LadderExpr& b);

}  // namespace awq
