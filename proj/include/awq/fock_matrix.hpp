#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "awq/ladder.hpp"

namespace awq {

/// Dense realization of a LadderExpr on the truncated Fock space
/// span{|0>, ..., |cutoff-1>} per mode, tensor indices flattened row-major
/// (mode 0 slowest). Positions outside the protected sub-block may carry
/// truncation artifacts; tests and expectation values should stay inside
/// indices < cutoff_m - degree_m.
struct OperatorMatrix {
  Eigen::MatrixXcd entries;
  std::vector<int> cutoffs;
  double hbar_value = 1.0;
  std::vector<std::string> warnings;

  int dim() const { return static_cast<int>(entries.rows()); }
  /// Levels of the given mode untouched by truncation for this operator.
  int protected_levels(int mode, const LadderExpr& e) const {
    return std::max(0, cutoffs[mode] - e.degree(mode));
  }
};

/// Flatten per-mode levels into the tensor index (row-major, mode 0 slowest).
int flatten_index(const std::vector<int>& levels, const std::vector<int>& cutoffs);
std::vector<int> unflatten_index(int flat, const std::vector<int>& cutoffs);

/// Truncated-basis matrix via a|n> = sqrt(n)|n-1>, products formed after
/// reduction to normal order. A term whose exponents reach the cutoff is
/// reported in warnings (it cannot act inside the space at all).
OperatorMatrix to_matrix(const LadderExpr& e, const std::vector<int>& cutoffs, double hbar);

inline OperatorMatrix to_matrix(const LadderExpr& e, int cutoff, double hbar) {
  return to_matrix(e, std::vector<int>(e.modes(), cutoff), hbar);
}

}  // namespace awq
