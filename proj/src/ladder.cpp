#include "awq/ladder.hpp"

namespace awq {

namespace {

Exponents zero_key(int modes) { return Exponents(2 * modes, 0); }

// a^n (ad)^m = sum_k k! C(n,k) C(m,k) (ad)^{m-k} a^{n-k}
// per mode; the single-mode reordering kernel behind every product.
void reorder_mode(std::vector<std::pair<std::pair<int, int>, Rational>>& acc, int n, int m) {
  std::vector<std::pair<std::pair<int, int>, Rational>> next;
  for (const auto& [mn, q] : acc) {
    const int kmax = std::min(n, m);
    for (int k = 0; k <= kmax; ++k) {
      Rational w = factorial_rat(k) * binomial(n, k) * binomial(m, k);
      next.push_back({{mn.first + m - k, mn.second + n - k}, q * w});
    }
  }
  acc = std::move(next);
}

}  // namespace

LadderExpr LadderExpr::identity(int modes) {
  LadderExpr e(modes);
  e.add_term(zero_key(modes), Coefficient::one());
  return e;
}

LadderExpr LadderExpr::ladder(int modes, int mode, bool creation) {
  LadderExpr e(modes);
  Exponents key = zero_key(modes);
  key[2 * mode + (creation ? 0 : 1)] = 1;
  e.add_term(key, Coefficient::one());
  return e;
}

LadderExpr LadderExpr::position(int modes, int mode) {
  Coefficient half_s = Coefficient::monomial(CRational(Rational(1, 2)), 1);
  return half_s * (ladder(modes, mode, false) + ladder(modes, mode, true));
}

LadderExpr LadderExpr::momentum(int modes, int mode) {
  Coefficient c = Coefficient::monomial(CRational(Rational(0), Rational(1, 2)), 1);
  return c * (ladder(modes, mode, true) - ladder(modes, mode, false));
}

LadderExpr LadderExpr::from_antinormal_monomial(int modes, const Exponents& jk,
                                                const Coefficient& c) {
  // a^j (ad)^k per mode, rewritten into normal order.
  LadderExpr out(modes);
  std::vector<std::pair<Exponents, Rational>> acc{{zero_key(modes), Rational(1)}};
  for (int mode = 0; mode < modes; ++mode) {
    const int j = jk[2 * mode], k = jk[2 * mode + 1];
    std::vector<std::pair<std::pair<int, int>, Rational>> local{{{0, 0}, Rational(1)}};
    reorder_mode(local, j, k);
    std::vector<std::pair<Exponents, Rational>> next;
    for (const auto& [e, q] : acc)
      for (const auto& [mn, w] : local) {
        Exponents ee = e;
        ee[2 * mode] += mn.first;
        ee[2 * mode + 1] += mn.second;
        next.push_back({std::move(ee), q * w});
      }
    acc = std::move(next);
  }
  for (const auto& [e, q] : acc) {
    Coefficient cc = c;
    cc.scale(q);
    out.add_term(e, cc);
  }
  return out;
}

void LadderExpr::add_term(const Exponents& e, const Coefficient& c) {
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

int LadderExpr::degree(int mode) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[2 * mode] + e[2 * mode + 1]);
  return d;
}

LadderExpr LadderExpr::adjoint() const {
  LadderExpr out(modes_);
  for (const auto& [e, c] : terms_) {
    Exponents swapped = e;
    for (int m = 0; m < modes_; ++m) std::swap(swapped[2 * m], swapped[2 * m + 1]);
    out.add_term(swapped, c.conj());
  }
  return out;
}

bool LadderExpr::is_formally_self_adjoint() const {
  for (const auto& [e, c] : terms_) {
    Exponents swapped = e;
    for (int m = 0; m < modes_; ++m) std::swap(swapped[2 * m], swapped[2 * m + 1]);
    auto it = terms_.find(swapped);
    if (it == terms_.end() || it->second != c.conj()) return false;
  }
  return true;
}

LadderExpr operator-(const LadderExpr& e) {
  LadderExpr out(e.modes_);
  for (const auto& [k, c] : e.terms_) out.terms_.emplace(k, -c);
  return out;
}

LadderExpr operator+(const LadderExpr& x, const LadderExpr& y) {
  if (x.modes_ != y.modes_) throw DimensionError("mode-count mismatch");
  LadderExpr out = x;
  for (const auto& [e, c] : y.terms_) out.add_term(e, c);
  return out;
}

LadderExpr operator-(const LadderExpr& x, const LadderExpr& y) { return x + (-y); }

LadderExpr operator*(const LadderExpr& x, const LadderExpr& y) {
  if (x.modes_ != y.modes_) throw DimensionError("mode-count mismatch");
  const int modes = x.modes_;
  LadderExpr out(modes);
  // (ad^m1 a^n1)(ad^m2 a^n2): commute a^n1 past ad^m2 mode by mode.
  for (const auto& [ex, cx] : x.terms_)
    for (const auto& [ey, cy] : y.terms_) {
      std::vector<std::pair<Exponents, Rational>> acc{{zero_key(modes), Rational(1)}};
      for (int mode = 0; mode < modes; ++mode) {
        const int m1 = ex[2 * mode], n1 = ex[2 * mode + 1];
        const int m2 = ey[2 * mode], n2 = ey[2 * mode + 1];
        std::vector<std::pair<std::pair<int, int>, Rational>> local{{{0, 0}, Rational(1)}};
        reorder_mode(local, n1, m2);
        std::vector<std::pair<Exponents, Rational>> next;
        next.reserve(acc.size() * local.size());
        for (const auto& [e, q] : acc)
          for (const auto& [mn, w] : local) {
            Exponents ee = e;
            ee[2 * mode] += m1 + mn.first;
            ee[2 * mode + 1] += n2 + mn.second;
            next.push_back({std::move(ee), q * w});
          }
        acc = std::move(next);
      }
      const Coefficient cxy = cx * cy;
      for (const auto& [e, q] : acc) {
        Coefficient c = cxy;
        c.scale(q);
        out.add_term(e, c);
      }
    }
  return out;
}

LadderExpr operator*(const Coefficient& c, const LadderExpr& e) {
  LadderExpr out(e.modes_);
  for (const auto& [k, ec] : e.terms_) out.add_term(k, c * ec);
  return out;
}

LadderExpr LadderExpr::pow(int n) const {
  LadderExpr out = identity(modes_);
  for (int i = 0; i < n; ++i) out *= *this;
  return out;
}

LadderExpr normal_order(int modes, const std::vector<LadderWord>& words) {
  LadderExpr out(modes);
  for (const auto& w : words) {
    LadderExpr acc = LadderExpr::identity(modes);
    for (const auto& letter : w.letters) {
      if (letter.mode < 0 || letter.mode >= modes)
        throw DimensionError("ladder letter references a mode outside the mode count");
      acc *= LadderExpr::ladder(modes, letter.mode, letter.creation);
    }
    out += w.coefficient * acc;
  }
  return out;
}

TermMap antinormal_order_form(const LadderExpr& e) {
  // (ad)^m a^n = sum_k (-1)^k k! C(m,k) C(n,k) a^{n-k} (ad)^{m-k}
  const int modes = e.modes();
  TermMap out;
  for (const auto& [key, c] : e.terms()) {
    std::vector<std::pair<Exponents, Rational>> acc{{Exponents(2 * modes, 0), Rational(1)}};
    for (int mode = 0; mode < modes; ++mode) {
      const int m = key[2 * mode], n = key[2 * mode + 1];
      std::vector<std::pair<Exponents, Rational>> next;
      const int kmax = std::min(m, n);
      for (const auto& [ee, q] : acc)
        for (int k = 0; k <= kmax; ++k) {
          Rational w = factorial_rat(k) * binomial(m, k) * binomial(n, k);
          if (k % 2 == 1) w = -w;
          Exponents e2 = ee;
          e2[2 * mode] += n - k;      // annihilation power
          e2[2 * mode + 1] += m - k;  // creation power
          next.push_back({std::move(e2), q * w});
        }
      acc = std::move(next);
    }
    for (const auto& [ee, q] : acc) {
      Coefficient cc = c;
      cc.scale(q);
      auto it = out.find(ee);
      if (it == out.end()) {
        if (!cc.is_zero()) out.emplace(ee, cc);
      } else {
        it->second += cc;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

LadderExpr commutator(const LadderExpr& a, const LadderExpr& b) { return a * b - b * a; }

}  // namespace awq
