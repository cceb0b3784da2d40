#pragma once

#include "awq/fock.hpp"
#include "awq/quadrature.hpp"
#include "awq/quantize.hpp"
#include "awq/symbol.hpp"

namespace awq {

/// Normalization of the Husimi density:
///   AlphaDensity -- (1/pi^n) |<phi_a|psi>|^2, integrates to 1 over d^2alpha
///   XpDensity    -- the same divided by (2 hbar)^n, integrates to 1 over dx dp
enum class QConvention { AlphaDensity, XpDensity };

inline constexpr int kDefaultQuadratureNodes = 40;
inline constexpr int kDefaultWignerNodes = 64;
inline constexpr int kDefaultSmoothingNodes = 32;

/// Evaluator for the Husimi function of a fixed state.
class HusimiDensity {
 public:
  HusimiDensity(FockState psi, QConvention convention,
                double state_tail = kDefaultTailTolerance);

  const FockState& state() const { return psi_; }
  QConvention convention() const { return convention_; }

  /// Pointwise Q value; throws CutoffError when the worst-case truncation
  /// bound for this probe center exceeds the evaluator tolerance.
  double value(const std::vector<std::complex<double>>& alpha) const;
  /// Single mode, phase-space coordinates.
  double value_xp(double x, double p) const;

  /// 1/pi^n (alpha) or 1/(2 pi hbar)^n (xp).
  double sup_bound() const;

 private:
  FockState psi_;
  QConvention convention_;
  double state_tail_;
};

double husimi_q(const FockState& psi, const std::vector<std::complex<double>>& alpha,
                QConvention convention = QConvention::AlphaDensity);

/// Max absolute deviation between the coherent-overlap route and the
/// Segal-Bargmann route |F(z)|^2 mu_hbar(z) * hbar^n, taken at
/// z = sqrt(hbar) * conj(alpha) (the scale bridge combined with the
/// alpha = conj(z) variable convention).
double q_equals_sb_check(const FockState& psi,
                         const std::vector<std::vector<std::complex<double>>>& points);

/// Classical-side oracle: expands Q as (polynomial) x Gaussian from the
/// Fock coefficients and integrates f*Q exactly by the per-mode moment
/// rule. No quadrature is involved.
std::complex<double> exact_q_average(const PhaseSymbol& f, const FockState& psi);

struct QuadratureEstimate {
  std::complex<double> value;
  /// Degree of the polynomial part of the integrand.
  int integrand_degree = 0;
  /// Highest degree the rule handles exactly.
  int rule_degree = 0;
  bool exact = true;
  std::string warning;
};

/// Gauss-Hermite counterpart of exact_q_average.
QuadratureEstimate quadrature_q_average(const PhaseSymbol& f, const FockState& psi,
                                        const QuadratureGrid& grid);

/// Applies the reproducing kernel by quadrature:
/// int e^{z.conj(w)/hbar} F(w) mu_hbar(w) dw, which must return F(z).
std::complex<double> reproducing_apply(const SBFunction& f,
                                       const std::vector<std::complex<double>>& z,
                                       const QuadratureGrid& grid);

/// (1/pi hbar) int conj(psi(x+y)) psi(x-y) e^{2ipy/hbar} dy by
/// Gauss-Hermite quadrature; single mode.
double wigner(const FockState& psi, double x, double p, int nodes = kDefaultWignerNodes);

/// Convolution of the Wigner function with the Gaussian kernel of variance
/// hbar/2 per axis; equals the xp-density Husimi function.
double weierstrass_smooth(const FockState& psi, double x, double p, const QuadratureGrid& grid,
                          int wigner_nodes = kDefaultWignerNodes);

/// int Q_xp(x, p) dp at fixed x; single mode.
double q_marginal_x(const FockState& psi, double x, const QuadratureGrid& grid);

struct VarianceReport {
  double var_x = 0.0;
  double var_p = 0.0;
  double product = 0.0;
};

/// Variances with x^2, p^2 promoted through the given scheme (linear terms
/// coincide in all schemes).
VarianceReport variance_report(const FockState& psi, Scheme scheme);

}  // namespace awq
