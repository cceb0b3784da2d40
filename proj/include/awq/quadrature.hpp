#pragma once

#include <Eigen/Dense>
#include <vector>

namespace awq {

/// Nodes and weights for int f(t) e^{-t^2} dt on the real line; exact for
/// polynomials of degree <= 2n - 1.
struct GaussHermiteRule {
  Eigen::ArrayXd nodes;
  Eigen::ArrayXd weights;
};

/// Golub-Welsch via Eigen's symmetric eigensolver, symmetrized so that
/// nodes come in exact +/- pairs (keeps downstream output byte-stable).
GaussHermiteRule gauss_hermite(int n);

/// Tensor Gauss-Hermite rule over dimension = 2 * modeCount, with an
/// optional affine map t -> center + scale * t to phase-space coordinates.
class QuadratureGrid {
 public:
  QuadratureGrid(int modes, int nodes_per_dim);

  int modes() const { return modes_; }
  int dimension() const { return 2 * modes_; }
  int nodes_per_dim() const { return static_cast<int>(rule_.nodes.size()); }
  const GaussHermiteRule& rule() const { return rule_; }

  void set_affine(const std::vector<double>& centers, const std::vector<double>& scales);
  double mapped(int dim, double t) const { return centers_[dim] + scales_[dim] * t; }

  /// Highest polynomial degree integrated exactly against exp(-|t|^2).
  int exact_degree() const { return 2 * nodes_per_dim() - 1; }

  /// Calls f(t, w) for every tensor node, t of size dimension() in the raw
  /// (unmapped) variables, w the product weight.
  template <typename F>
  void for_each_node(F&& f) const {
    const int d = dimension();
    const int n = nodes_per_dim();
    std::vector<int> idx(d, 0);
    std::vector<double> t(d);
    for (;;) {
      double w = 1.0;
      for (int i = 0; i < d; ++i) {
        t[i] = rule_.nodes[idx[i]];
        w *= rule_.weights[idx[i]];
      }
      f(t, w);
      int i = d - 1;
      while (i >= 0 && ++idx[i] == n) idx[i--] = 0;
      if (i < 0) break;
    }
  }

 private:
  int modes_;
  GaussHermiteRule rule_;
  std::vector<double> centers_, scales_;
};

}  // namespace awq
