#include "awq/fock.hpp"

#include <cmath>

namespace awq {

double coherent_tail_mass(double a2, int cutoff) {
  // 1 - e^{-a2} sum_{n<cutoff} a2^n / n!, summed forward; the partial sum
  // is monotone so the subtraction is benign.
  double term = std::exp(-a2);
  double sum = 0.0;
  for (int n = 0; n < cutoff; ++n) {
    sum += term;
    term *= a2 / (n + 1);
  }
  return std::max(0.0, 1.0 - sum);
}

int adequate_cutoff(double a2, double tol) {
  int n = 1;
  while (coherent_tail_mass(a2, n) >= tol && n < 4096) ++n;
  return n;
}

FockState::FockState(int modes, std::vector<int> cutoffs, Eigen::VectorXcd coefficients,
                     double hbar)
    : modes_(modes), cutoffs_(std::move(cutoffs)), c_(std::move(coefficients)), hbar_(hbar) {
  if (modes_ < 1) throw std::invalid_argument("mode count must be positive");
  if (static_cast<int>(cutoffs_.size()) != modes_)
    throw DimensionError("cutoff list does not match mode count");
  int dim = 1;
  for (int c : cutoffs_) {
    if (c < 1) throw std::invalid_argument("cutoff must be at least 1");
    dim *= c;
  }
  if (c_.size() != dim) throw DimensionError("coefficient vector length must be prod(cutoffs)");
  if (hbar_ <= 0.0) throw std::invalid_argument("hbar must be positive");
}

FockState FockState::vacuum(int modes, const std::vector<int>& cutoffs, double hbar) {
  int dim = 1;
  for (int c : cutoffs) dim *= c;
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
  v(0) = 1.0;
  return FockState(modes, cutoffs, std::move(v), hbar);
}

FockState FockState::fock(int modes, const std::vector<int>& levels,
                          const std::vector<int>& cutoffs, double hbar) {
  if (static_cast<int>(levels.size()) != modes)
    throw DimensionError("level list does not match mode count");
  for (int m = 0; m < modes; ++m)
    if (levels[m] < 0 || levels[m] >= cutoffs[m])
      throw CutoffError("Fock level " + std::to_string(levels[m]) + " outside the cutoff",
                        levels[m] + 1);
  int dim = 1;
  for (int c : cutoffs) dim *= c;
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
  v(flatten_index(levels, cutoffs)) = 1.0;
  return FockState(modes, cutoffs, std::move(v), hbar);
}

FockState FockState::coherent(const std::vector<std::complex<double>>& alpha,
                              const std::vector<int>& cutoffs, double hbar, double tail_tol) {
  const int modes = static_cast<int>(alpha.size());
  if (static_cast<int>(cutoffs.size()) != modes)
    throw DimensionError("cutoff list does not match mode count");
  std::vector<Eigen::VectorXcd> per_mode(modes);
  for (int m = 0; m < modes; ++m) {
    const double a2 = std::norm(alpha[m]);
    const double tail = coherent_tail_mass(a2, cutoffs[m]);
    if (tail >= tail_tol)
      throw CutoffError("coherent tail mass " + std::to_string(tail) + " above tolerance",
                        adequate_cutoff(a2, tail_tol));
    Eigen::VectorXcd v(cutoffs[m]);
    std::complex<double> term = std::exp(-a2 / 2.0);
    for (int n = 0; n < cutoffs[m]; ++n) {
      v(n) = term;
      term *= alpha[m] / std::sqrt(n + 1.0);
    }
    per_mode[m] = std::move(v);
  }
  int dim = 1;
  for (int c : cutoffs) dim *= c;
  Eigen::VectorXcd v(dim);
  for (int flat = 0; flat < dim; ++flat) {
    auto levels = unflatten_index(flat, cutoffs);
    std::complex<double> prod = 1.0;
    for (int m = 0; m < modes; ++m) prod *= per_mode[m](levels[m]);
    v(flat) = prod;
  }
  return FockState(modes, cutoffs, std::move(v), hbar);
}

FockState FockState::normalized() const {
  const double n = norm();
  if (n == 0.0) throw std::domain_error("cannot normalize the zero state");
  FockState out = *this;
  out.c_ /= n;
  return out;
}

std::vector<int> FockState::occupied_levels(double eps) const {
  // smallest per-mode level L with squared mass above L at most eps; a
  // plain max-nonzero rule would flag every coherent state, whose
  // coefficients extend (negligibly) to the top of the cutoff
  std::vector<int> occ(modes_, 0);
  for (int m = 0; m < modes_; ++m) {
    std::vector<double> mass(cutoffs_[m], 0.0);
    for (int flat = 0; flat < dim(); ++flat)
      mass[unflatten_index(flat, cutoffs_)[m]] += std::norm(c_(flat));
    double tail = 0.0;
    int level = cutoffs_[m] - 1;
    while (level > 0 && tail + mass[level] <= eps) tail += mass[level--];
    occ[m] = level;
  }
  return occ;
}

std::complex<double> inner_product(const FockState& a, const FockState& b) {
  if (a.modes() != b.modes() || a.cutoffs() != b.cutoffs())
    throw DimensionError("states live on different truncated spaces");
  return a.coefficients().dot(b.coefficients());  // Eigen dot conjugates the left factor
}

std::complex<double> expectation(const FockState& psi, const LadderExpr& e) {
  if (e.modes() != psi.modes()) throw DimensionError("mode-count mismatch");
  OperatorMatrix m = to_matrix(e, psi.cutoffs(), psi.hbar());
  return psi.coefficients().dot(m.entries * psi.coefficients());
}

ExpectationResult expectation_report(const FockState& psi, const LadderExpr& e) {
  ExpectationResult r;
  r.value = expectation(psi, e);
  const auto occ = psi.occupied_levels();
  r.suggested_cutoffs.resize(psi.modes());
  for (int m = 0; m < psi.modes(); ++m) {
    const int needed = occ[m] + e.degree(m) + 1;
    r.suggested_cutoffs[m] = std::max(needed, psi.cutoffs()[m]);
    if (psi.cutoffs()[m] < needed) {
      r.margin_ok = false;
      r.warning = "cutoff " + std::to_string(psi.cutoffs()[m]) + " on mode " +
                  std::to_string(m + 1) + " leaves no truncation margin (occupied level " +
                  std::to_string(occ[m]) + " + operator degree " + std::to_string(e.degree(m)) +
                  "); suggested cutoff " + std::to_string(needed);
    }
  }
  return r;
}

SBFunction::SBFunction(int modes, std::vector<int> cutoffs, Eigen::VectorXcd coefficients,
                       double hbar)
    : modes_(modes), cutoffs_(std::move(cutoffs)), c_(std::move(coefficients)), hbar_(hbar) {}

std::complex<double> SBFunction::evaluate(const std::vector<std::complex<double>>& z) const {
  if (static_cast<int>(z.size()) != modes_)
    throw DimensionError("evaluation point does not match mode count");
  // per-mode orthonormal monomials e_n(z) = z^n / sqrt(n! hbar^n)
  std::vector<Eigen::VectorXcd> basis(modes_);
  for (int m = 0; m < modes_; ++m) {
    Eigen::VectorXcd b(cutoffs_[m]);
    std::complex<double> term = 1.0;
    for (int n = 0; n < cutoffs_[m]; ++n) {
      b(n) = term;
      term *= z[m] / std::sqrt((n + 1.0) * hbar_);
    }
    basis[m] = std::move(b);
  }
  std::complex<double> v = 0.0;
  for (int flat = 0; flat < c_.size(); ++flat) {
    auto levels = unflatten_index(static_cast<int>(flat), cutoffs_);
    std::complex<double> prod = c_(flat);
    for (int m = 0; m < modes_; ++m) prod *= basis[m](levels[m]);
    v += prod;
  }
  return v;
}

SBFunction segal_bargmann_transform(const FockState& psi) {
  return SBFunction(psi.modes(), psi.cutoffs(), psi.coefficients(), psi.hbar());
}

Eigen::VectorXd hermite_functions(int count, double x, double hbar) {
  Eigen::VectorXd h = hermite_envelope_free(count, x, hbar);
  return h * std::exp(-x * x / (2.0 * hbar));
}

Eigen::VectorXd hermite_envelope_free(int count, double x, double hbar) {
  Eigen::VectorXd h(count);
  const double y = x / std::sqrt(hbar);
  double h0 = std::pow(M_PI * hbar, -0.25);
  if (count > 0) h(0) = h0;
  if (count > 1) h(1) = std::sqrt(2.0) * y * h0;
  for (int n = 1; n + 1 < count; ++n)
    h(n + 1) = std::sqrt(2.0 / (n + 1.0)) * y * h(n) - std::sqrt(n / (n + 1.0)) * h(n - 1);
  return h;
}

std::complex<double> position_wavefunction(const FockState& psi, double x) {
  if (psi.modes() != 1)
    throw DimensionError("position wavefunction is defined for single-mode states");
  Eigen::VectorXd h = hermite_functions(psi.dim(), x, psi.hbar());
  std::complex<double> v = 0.0;
  for (int n = 0; n < psi.dim(); ++n) v += psi.coefficients()(n) * h(n);
  return v;
}

}  // namespace awq
