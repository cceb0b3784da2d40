#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "awq/fock_matrix.hpp"
#include "awq/ladder.hpp"

namespace awq {

/// Raised when a requested cutoff cannot hold a state to the configured
/// tail tolerance; carries the smallest cutoff that would.
struct CutoffError : std::runtime_error {
  CutoffError(const std::string& what, int minimal)
      : std::runtime_error(what + " (minimal adequate cutoff: " + std::to_string(minimal) + ")"),
        minimal_adequate(minimal) {}
  int minimal_adequate;
};

/// Dropped tail mass of a coherent state with |alpha|^2 = a2 truncated at
/// the given level count.
double coherent_tail_mass(double a2, int cutoff);
/// Smallest cutoff with coherent tail mass below tol.
int adequate_cutoff(double a2, double tol);

inline constexpr double kDefaultTailTolerance = 1e-14;

/// Truncated Fock-space state over a tensor basis, coefficients flattened
/// row-major (mode 0 slowest) like OperatorMatrix.
class FockState {
 public:
  FockState(int modes, std::vector<int> cutoffs, Eigen::VectorXcd coefficients, double hbar);

  static FockState vacuum(int modes, const std::vector<int>& cutoffs, double hbar);
  /// Basis state |n_0, n_1, ...>.
  static FockState fock(int modes, const std::vector<int>& levels,
                        const std::vector<int>& cutoffs, double hbar);
  /// Coherent state with per-mode coefficients e^{-|a|^2/2} a^n / sqrt(n!).
  /// Throws CutoffError when the dropped tail exceeds tail_tol.
  static FockState coherent(const std::vector<std::complex<double>>& alpha,
                            const std::vector<int>& cutoffs, double hbar,
                            double tail_tol = kDefaultTailTolerance);

  int modes() const { return modes_; }
  const std::vector<int>& cutoffs() const { return cutoffs_; }
  double hbar() const { return hbar_; }
  int dim() const { return static_cast<int>(c_.size()); }
  const Eigen::VectorXcd& coefficients() const { return c_; }

  double norm() const { return c_.norm(); }
  FockState normalized() const;

  /// Smallest per-mode level holding all but eps of the squared mass.
  std::vector<int> occupied_levels(double eps = 1e-13) const;

 private:
  int modes_;
  std::vector<int> cutoffs_;
  Eigen::VectorXcd c_;
  double hbar_;
};

std::complex<double> inner_product(const FockState& a, const FockState& b);

/// <psi| to_matrix(E) |psi>.
std::complex<double> expectation(const FockState& psi, const LadderExpr& e);

struct ExpectationResult {
  std::complex<double> value;
  bool margin_ok = true;
  /// Smallest per-mode cutoff that would protect the result from
  /// truncation, when margin_ok is false.
  std::vector<int> suggested_cutoffs;
  std::string warning;
};

/// Like expectation, but checks that the cutoff exceeds the occupied
/// levels by the operator degree and reports a truncation estimate.
ExpectationResult expectation_report(const FockState& psi, const LadderExpr& e);

/// Holomorphic-side view of a state: F(z) = sum_n c_n z^n / sqrt(n! hbar^n)
/// per mode; coefficients coincide with the Fock coefficients under the
/// orthonormal correspondence |n> <-> z^n / sqrt(n! hbar^n).
class SBFunction {
 public:
  SBFunction(int modes, std::vector<int> cutoffs, Eigen::VectorXcd coefficients, double hbar);

  int modes() const { return modes_; }
  double hbar() const { return hbar_; }
  const Eigen::VectorXcd& coefficients() const { return c_; }

  /// SB norm; equals the Euclidean coefficient norm (Parseval).
  double norm() const { return c_.norm(); }

  std::complex<double> evaluate(const std::vector<std::complex<double>>& z) const;

 private:
  int modes_;
  std::vector<int> cutoffs_;
  Eigen::VectorXcd c_;
  double hbar_;
};

/// Identity on coefficient vectors; the unitary between the truncated Fock
/// space and the polynomial subspace it spans.
SBFunction segal_bargmann_transform(const FockState& psi);

/// Orthonormal oscillator eigenfunctions h_0..h_{count-1} at x,
/// h_0(x) = (pi hbar)^{-1/4} e^{-x^2/(2 hbar)}, by upward recurrence.
Eigen::VectorXd hermite_functions(int count, double x, double hbar);
/// Same values without the Gaussian envelope e^{-x^2/(2 hbar)}; lets
/// quadrature against e^{-t^2} weights absorb the envelope analytically.
Eigen::VectorXd hermite_envelope_free(int count, double x, double hbar);

/// <x|psi> for a single-mode state.
std::complex<double> position_wavefunction(const FockState& psi, double x);

}  // namespace awq
