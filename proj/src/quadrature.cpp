#include "awq/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace awq {

GaussHermiteRule gauss_hermite(int n) {
  if (n < 1) throw std::invalid_argument("quadrature rule needs at least one node");
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    const double beta = std::sqrt(k / 2.0);
    jacobi(k, k - 1) = beta;
    jacobi(k - 1, k) = beta;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
  GaussHermiteRule rule;
  rule.nodes = es.eigenvalues().array();
  const double mu0 = std::sqrt(M_PI);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    const double v0 = es.eigenvectors()(0, i);
    rule.weights[i] = mu0 * v0 * v0;
  }
  // enforce exact +/- symmetry
  for (int i = 0; i < n / 2; ++i) {
    const int j = n - 1 - i;
    const double t = 0.5 * (rule.nodes[j] - rule.nodes[i]);
    rule.nodes[i] = -t;
    rule.nodes[j] = t;
    const double w = 0.5 * (rule.weights[i] + rule.weights[j]);
    rule.weights[i] = w;
    rule.weights[j] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

QuadratureGrid::QuadratureGrid(int modes, int nodes_per_dim)
    : modes_(modes),
      rule_(gauss_hermite(nodes_per_dim)),
      centers_(2 * modes, 0.0),
      scales_(2 * modes, 1.0) {
  if (modes < 1) throw std::invalid_argument("mode count must be positive");
}

void QuadratureGrid::set_affine(const std::vector<double>& centers,
                                const std::vector<double>& scales) {
  if (static_cast<int>(centers.size()) != dimension() ||
      static_cast<int>(scales.size()) != dimension())
    throw std::invalid_argument("affine map size does not match grid dimension");
  centers_ = centers;
  scales_ = scales;
}

}  // namespace awq
