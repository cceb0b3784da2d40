#include "awq/phase_space.hpp"

#include <cmath>

#include "awq/parse.hpp"

namespace awq {

namespace {

/// sum_flat c_flat prod_m w_m^{n_m} / sqrt(n_m!) -- the polynomial part of
/// <phi_alpha|psi> at w = conj(alpha), and of the Segal-Bargmann function.
std::complex<double> coefficient_polynomial(const FockState& psi,
                                            const std::vector<std::complex<double>>& w) {
  const auto& cutoffs = psi.cutoffs();
  const int modes = psi.modes();
  std::vector<Eigen::VectorXcd> basis(modes);
  for (int m = 0; m < modes; ++m) {
    Eigen::VectorXcd b(cutoffs[m]);
    std::complex<double> term = 1.0;
    for (int n = 0; n < cutoffs[m]; ++n) {
      b(n) = term;
      term *= w[m] / std::sqrt(n + 1.0);
    }
    basis[m] = std::move(b);
  }
  std::complex<double> v = 0.0;
  for (int flat = 0; flat < psi.dim(); ++flat) {
    auto levels = unflatten_index(flat, cutoffs);
    std::complex<double> prod = psi.coefficients()(flat);
    for (int m = 0; m < modes; ++m) prod *= basis[m](levels[m]);
    v += prod;
  }
  return v;
}

double norm2(const std::vector<std::complex<double>>& v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return s;
}

/// Numeric sparse polynomial in (alpha, conj alpha), same key layout as
/// PhaseSymbol terms.
using NumericTerms = std::map<Exponents, std::complex<double>>;

NumericTerms numeric_terms(const PhaseSymbol& f, double hbar) {
  NumericTerms out;
  for (const auto& [e, c] : f.terms()) out[e] = c.evaluate(hbar);
  return out;
}

/// Q * pi^n * e^{|alpha|^2} as a numeric polynomial:
/// sum_{m,n} conj(c_m) c_n alpha^m conj(alpha)^n / sqrt(m! n!).
NumericTerms husimi_polynomial(const FockState& psi) {
  const auto& cutoffs = psi.cutoffs();
  const int modes = psi.modes();
  std::vector<double> inv_sqrt_fact;
  {
    int maxc = 0;
    for (int c : cutoffs) maxc = std::max(maxc, c);
    inv_sqrt_fact.resize(maxc);
    double fact = 1.0;
    for (int n = 0; n < maxc; ++n) {
      if (n > 0) fact *= n;
      inv_sqrt_fact[n] = 1.0 / std::sqrt(fact);
    }
  }
  NumericTerms out;
  for (int mi = 0; mi < psi.dim(); ++mi) {
    const auto ml = unflatten_index(mi, cutoffs);
    for (int ni = 0; ni < psi.dim(); ++ni) {
      const auto nl = unflatten_index(ni, cutoffs);
      std::complex<double> c = std::conj(psi.coefficients()(mi)) * psi.coefficients()(ni);
      if (c == std::complex<double>(0.0, 0.0)) continue;
      Exponents key(2 * modes, 0);
      for (int m = 0; m < modes; ++m) {
        key[2 * m] = ml[m];      // alpha power
        key[2 * m + 1] = nl[m];  // conj(alpha) power
        c *= inv_sqrt_fact[ml[m]] * inv_sqrt_fact[nl[m]];
      }
      out[key] += c;
    }
  }
  return out;
}

}  // namespace

HusimiDensity::HusimiDensity(FockState psi, QConvention convention, double state_tail)
    : psi_(std::move(psi)), convention_(convention), state_tail_(state_tail) {}

double HusimiDensity::value(const std::vector<std::complex<double>>& alpha) const {
  if (static_cast<int>(alpha.size()) != psi_.modes())
    throw DimensionError("phase-space point does not match mode count");
  // worst-case effect of the state's own truncation on this probe
  double probe_tail = 0.0;
  for (int m = 0; m < psi_.modes(); ++m)
    probe_tail =
        std::max(probe_tail, coherent_tail_mass(std::norm(alpha[m]), psi_.cutoffs()[m]));
  const double bound = 2.0 * std::sqrt(probe_tail * state_tail_) + probe_tail * state_tail_;
  if (bound > 1e-6) {
    int minimal = psi_.cutoffs()[0];
    for (int m = 0; m < psi_.modes(); ++m)
      minimal = std::max(minimal, adequate_cutoff(std::norm(alpha[m]), kDefaultTailTolerance));
    throw CutoffError("state cutoff cannot support a Husimi probe this far out", minimal);
  }

  std::vector<std::complex<double>> w(alpha.size());
  for (size_t m = 0; m < alpha.size(); ++m) w[m] = std::conj(alpha[m]);
  const std::complex<double> g = coefficient_polynomial(psi_, w);
  double q = std::norm(g) * std::exp(-norm2(alpha)) / std::pow(M_PI, psi_.modes());
  if (convention_ == QConvention::XpDensity) q /= std::pow(2.0 * psi_.hbar(), psi_.modes());
  return q;
}

double HusimiDensity::value_xp(double x, double p) const {
  if (psi_.modes() != 1) throw DimensionError("xp evaluation is single mode");
  const double s = std::sqrt(2.0 * psi_.hbar());
  return value({std::complex<double>(x / s, p / s)});
}

double HusimiDensity::sup_bound() const {
  if (convention_ == QConvention::AlphaDensity) return std::pow(M_PI, -psi_.modes());
  return std::pow(2.0 * M_PI * psi_.hbar(), -psi_.modes());
}

double husimi_q(const FockState& psi, const std::vector<std::complex<double>>& alpha,
                QConvention convention) {
  return HusimiDensity(psi, convention).value(alpha);
}

double q_equals_sb_check(const FockState& psi,
                         const std::vector<std::vector<std::complex<double>>>& points) {
  const SBFunction f = segal_bargmann_transform(psi);
  const GaussianMeasure mu{psi.hbar(), psi.modes()};
  const HusimiDensity q(psi, QConvention::AlphaDensity);
  const double hbar_n = std::pow(psi.hbar(), psi.modes());
  double sup = 0.0;
  for (const auto& alpha : points) {
    std::vector<std::complex<double>> z(alpha.size());
    for (size_t m = 0; m < alpha.size(); ++m) z[m] = std::sqrt(psi.hbar()) * std::conj(alpha[m]);
    const double sb_route = std::norm(f.evaluate(z)) * mu.z_density(z) * hbar_n;
    sup = std::max(sup, std::abs(q.value(alpha) - sb_route));
  }
  return sup;
}

std::complex<double> exact_q_average(const PhaseSymbol& f, const FockState& psi) {
  if (f.modes() != psi.modes()) throw DimensionError("mode-count mismatch");
  const NumericTerms fv = numeric_terms(f, psi.hbar());
  const NumericTerms hv = husimi_polynomial(psi);
  // moment rule: int a^j ac^k e^{-|a|^2}/pi d^2a = delta_jk j!
  std::complex<double> total = 0.0;
  for (const auto& [ef, cf] : fv)
    for (const auto& [eh, ch] : hv) {
      bool diagonal = true;
      double fact = 1.0;
      for (int m = 0; m < f.modes(); ++m) {
        const int j = ef[2 * m] + eh[2 * m];
        const int k = ef[2 * m + 1] + eh[2 * m + 1];
        if (j != k) {
          diagonal = false;
          break;
        }
        for (int t = 2; t <= j; ++t) fact *= t;
      }
      if (diagonal) total += cf * ch * fact;
    }
  return total;
}

QuadratureEstimate quadrature_q_average(const PhaseSymbol& f, const FockState& psi,
                                        const QuadratureGrid& grid) {
  if (grid.modes() != psi.modes() || f.modes() != psi.modes())
    throw DimensionError("grid dimension does not match");
  QuadratureEstimate est;
  int max_level = 0;
  for (int c : psi.cutoffs()) max_level = std::max(max_level, c - 1);
  est.integrand_degree = f.total_degree() + 2 * max_level;
  est.rule_degree = grid.exact_degree();
  est.exact = est.integrand_degree <= est.rule_degree;
  if (!est.exact)
    est.warning = "rule is exact to degree " + std::to_string(est.rule_degree) +
                  " but the integrand has degree " + std::to_string(est.integrand_degree);

  const int modes = psi.modes();
  const double inv_pi_n = std::pow(M_PI, -modes);
  std::vector<std::complex<double>> alpha(modes), w(modes);
  std::complex<double> total = 0.0;
  grid.for_each_node([&](const std::vector<double>& t, double weight) {
    for (int m = 0; m < modes; ++m) {
      alpha[m] = {t[2 * m], t[2 * m + 1]};
      w[m] = std::conj(alpha[m]);
    }
    const std::complex<double> g = coefficient_polynomial(psi, w);
    total += weight * evaluate_symbol(f, alpha, psi.hbar()) * std::norm(g) * inv_pi_n;
  });
  est.value = total;
  return est;
}

std::complex<double> reproducing_apply(const SBFunction& f,
                                       const std::vector<std::complex<double>>& z,
                                       const QuadratureGrid& grid) {
  if (grid.modes() != f.modes()) throw DimensionError("grid dimension does not match");
  const int modes = f.modes();
  const double sqrt_h = std::sqrt(f.hbar());
  const double inv_pi_n = std::pow(M_PI, -modes);
  std::vector<std::complex<double>> w(modes);
  std::complex<double> total = 0.0;
  grid.for_each_node([&](const std::vector<double>& t, double weight) {
    std::complex<double> zdotwbar = 0.0;
    for (int m = 0; m < modes; ++m) {
      w[m] = std::complex<double>(t[2 * m], t[2 * m + 1]) * sqrt_h;
      zdotwbar += z[m] * std::conj(w[m]);
    }
    total += weight * std::exp(zdotwbar / f.hbar()) * f.evaluate(w) * inv_pi_n;
  });
  return total;
}

double wigner(const FockState& psi, double x, double p, int nodes) {
  if (psi.modes() != 1) throw DimensionError("Wigner evaluation is single mode");
  const double hbar = psi.hbar();
  const double sh = std::sqrt(hbar);
  const auto rule = gauss_hermite(nodes);
  // conj(psi(x+y)) psi(x-y) = poly(x+y) poly(x-y) e^{-x^2/hbar} e^{-t^2},
  // y = sqrt(hbar) t; the e^{-t^2} factor is the quadrature weight.
  std::complex<double> acc = 0.0;
  for (int i = 0; i < rule.nodes.size(); ++i) {
    const double t = rule.nodes[i];
    Eigen::VectorXd hplus = hermite_envelope_free(psi.dim(), x + sh * t, hbar);
    Eigen::VectorXd hminus = hermite_envelope_free(psi.dim(), x - sh * t, hbar);
    std::complex<double> fplus = 0.0, fminus = 0.0;
    for (int n = 0; n < psi.dim(); ++n) {
      fplus += psi.coefficients()(n) * hplus(n);
      fminus += psi.coefficients()(n) * hminus(n);
    }
    const std::complex<double> phase{std::cos(2.0 * p * t / sh), std::sin(2.0 * p * t / sh)};
    acc += rule.weights[i] * std::conj(fplus) * fminus * phase;
  }
  return (acc.real()) * std::exp(-x * x / hbar) / (M_PI * sh);
}

double weierstrass_smooth(const FockState& psi, double x, double p, const QuadratureGrid& grid,
                          int wigner_nodes) {
  if (psi.modes() != 1) throw DimensionError("smoothing is single mode");
  const double hbar = psi.hbar();
  const double sh = std::sqrt(hbar);
  const auto& srule = grid.rule();
  const auto wrule = gauss_hermite(wigner_nodes);
  const int ns = static_cast<int>(srule.nodes.size());
  const int nw = static_cast<int>(wrule.nodes.size());

  // W(x - sh s_i, p - sh s_j) factorizes into an x-dependent block B and a
  // p-dependent phase block E; evaluating W on the full smoothing stencil
  // as B * E shares the Hermite work across the momentum dimension.
  Eigen::MatrixXcd B(ns, nw);
  for (int i = 0; i < ns; ++i) {
    const double xi = x - sh * srule.nodes[i];
    for (int k = 0; k < nw; ++k) {
      const double t = wrule.nodes[k];
      Eigen::VectorXd hplus = hermite_envelope_free(psi.dim(), xi + sh * t, hbar);
      Eigen::VectorXd hminus = hermite_envelope_free(psi.dim(), xi - sh * t, hbar);
      std::complex<double> fplus = 0.0, fminus = 0.0;
      for (int n = 0; n < psi.dim(); ++n) {
        fplus += psi.coefficients()(n) * hplus(n);
        fminus += psi.coefficients()(n) * hminus(n);
      }
      B(i, k) = wrule.weights[k] * std::conj(fplus) * fminus * std::exp(-xi * xi / hbar);
    }
  }
  Eigen::MatrixXcd E(nw, ns);
  for (int j = 0; j < ns; ++j) {
    const double pj = p - sh * srule.nodes[j];
    for (int k = 0; k < nw; ++k) {
      const double arg = 2.0 * pj * wrule.nodes[k] / sh;
      E(k, j) = std::complex<double>(std::cos(arg), std::sin(arg));
    }
  }
  const Eigen::MatrixXcd W = B * E;  // W(i,j) * pi * sh = Wigner at the stencil
  double total = 0.0;
  for (int i = 0; i < ns; ++i)
    for (int j = 0; j < ns; ++j)
      total += srule.weights[i] * srule.weights[j] * W(i, j).real();
  return total / (M_PI * sh) / M_PI;
}

double q_marginal_x(const FockState& psi, double x, const QuadratureGrid& grid) {
  if (psi.modes() != 1) throw DimensionError("marginal evaluation is single mode");
  const double s = std::sqrt(2.0 * psi.hbar());
  const double u = x / s;
  const auto& rule = grid.rule();
  double total = 0.0;
  for (int j = 0; j < rule.nodes.size(); ++j) {
    const double v = rule.nodes[j];
    const std::complex<double> g =
        coefficient_polynomial(psi, {std::complex<double>(u, -v)});
    total += rule.weights[j] * std::norm(g);
  }
  return total * std::exp(-u * u) / (M_PI * s);
}

VarianceReport variance_report(const FockState& psi, Scheme scheme) {
  if (psi.modes() != 1) throw DimensionError("variance report is single mode");
  const PhaseSymbol x = PhaseSymbol::x(1, 0);
  const PhaseSymbol p = PhaseSymbol::p(1, 0);
  const double mx = expectation(psi, quantize(x, scheme)).real();
  const double mp = expectation(psi, quantize(p, scheme)).real();
  const double mx2 = expectation(psi, quantize(x * x, scheme)).real();
  const double mp2 = expectation(psi, quantize(p * p, scheme)).real();
  VarianceReport r;
  r.var_x = mx2 - mx * mx;
  r.var_p = mp2 - mp * mp;
  r.product = r.var_x * r.var_p;
  return r;
}

}  // namespace awq
