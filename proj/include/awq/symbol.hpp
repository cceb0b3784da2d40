#pragma once

#include <complex>
#include <map>
#include <vector>

#include "awq/coefficient.hpp"

namespace awq {

/// Flattened per-mode exponent pairs. For a PhaseSymbol the layout is
/// [j0, k0, j1, k1, ...] with j = power of alpha_m and k = power of
/// conj(alpha_m); an XpTermMap uses the same layout with (x-power, p-power)
/// pairs. std::map's lexicographic vector ordering makes iteration
/// deterministic.
using Exponents = std::vector<int>;
using TermMap = std::map<Exponents, Coefficient>;

struct DimensionError : std::runtime_error {
  explicit DimensionError(const std::string& what) : std::runtime_error(what) {}
};
struct DegreeCapError : std::runtime_error {
  explicit DegreeCapError(const std::string& what) : std::runtime_error(what) {}
};

/// Default per-mode degree cap; bounds Weyl symmetrization cost.
inline constexpr int kDefaultDegreeCap = 16;

/// Length scale of the x/p <-> alpha map, fixed to 1; documented here so
/// the convention is explicit (x and p are measured in units where the
/// oscillator length drops out).
inline constexpr double kLengthScale = 1.0;

/// Commutative polynomial observable  sum_{jk} A_jk alpha^j conj(alpha)^k
/// per mode, with exact Coefficient entries. Canonical form: no stored term
/// has a zero coefficient.
class PhaseSymbol {
 public:
  PhaseSymbol() = default;
  explicit PhaseSymbol(int modes) : modes_(modes) {}

  static PhaseSymbol constant(int modes, const Coefficient& c);
  static PhaseSymbol zero(int modes) { return PhaseSymbol(modes); }
  /// alpha_m or conj(alpha_m) as a symbol.
  static PhaseSymbol alpha(int modes, int mode, bool conjugated = false);
  /// x_m = sqrt(2 hbar) Re(alpha_m) and p_m = sqrt(2 hbar) Im(alpha_m).
  static PhaseSymbol x(int modes, int mode);
  static PhaseSymbol p(int modes, int mode);

  int modes() const { return modes_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& e, const Coefficient& c);

  /// Max of (j_m + k_m) over the given mode's exponents.
  int degree(int mode) const;
  int total_degree() const;

  /// Real-valued on phase space iff coeff(j,k) == conj(coeff(k,j)).
  bool is_real() const;

  PhaseSymbol conjugated() const;

  friend PhaseSymbol operator-(const PhaseSymbol& f);
  friend PhaseSymbol operator+(const PhaseSymbol& f, const PhaseSymbol& g);
  friend PhaseSymbol operator-(const PhaseSymbol& f, const PhaseSymbol& g);
  friend PhaseSymbol operator*(const PhaseSymbol& f, const PhaseSymbol& g);
  friend PhaseSymbol operator*(const Coefficient& c, const PhaseSymbol& f);
  PhaseSymbol& operator+=(const PhaseSymbol& g) { return *this = *this + g; }
  PhaseSymbol& operator-=(const PhaseSymbol& g) { return *this = *this - g; }
  PhaseSymbol& operator*=(const PhaseSymbol& g) { return *this = *this * g; }

  friend bool operator==(const PhaseSymbol& f, const PhaseSymbol& g) {
    return f.modes_ == g.modes_ && f.terms_ == g.terms_;
  }
  friend bool operator!=(const PhaseSymbol& f, const PhaseSymbol& g) { return !(f == g); }

  PhaseSymbol pow(int n) const;

  /// d/d(alpha_m) or d/d(conj(alpha_m)).
  PhaseSymbol derivative(int mode, bool wrt_conjugate) const;

 private:
  int modes_ = 1;
  TermMap terms_;
};

/// Unit-mass Gaussian reference measure. alpha_density integrates to 1 over
/// prod d^2alpha_m; z_density is the same measure in the scaled variable
/// z = sqrt(hbar)*conj(alpha) and integrates to 1 over prod d^2z_m.
struct GaussianMeasure {
  double hbar = 1.0;
  int modes = 1;

  double alpha_density(const std::vector<std::complex<double>>& a) const;
  double z_density(const std::vector<std::complex<double>>& z) const;
};

/// Numeric value of f at a phase-space point, hbar substituted.
std::complex<double> evaluate_symbol(const PhaseSymbol& f,
                                     const std::vector<std::complex<double>>& point,
                                     double hbar);

/// sum_m (df/dx_m dg/dp_m - df/dp_m dg/dx_m), computed exactly in the
/// alpha representation as (i/hbar) sum_m (df/dac dg/da - df/da dg/dac).
PhaseSymbol poisson_bracket(const PhaseSymbol& f, const PhaseSymbol& g);

/// Exact integral of f against the unit-mass Gaussian in alpha variables:
/// only diagonal monomials survive,  int a^j ac^k e^{-|a|^2}/pi = delta_jk j!.
std::complex<double> gaussian_moment_integral(const PhaseSymbol& f, double hbar);

/// Exact rewrite into x/p monomials, exponents [x0,p0,x1,p1,...].
TermMap to_xp_terms(const PhaseSymbol& f);
/// Inverse rewrite; exact.
PhaseSymbol from_xp_terms(int modes, const TermMap& xp);

}  // namespace awq
