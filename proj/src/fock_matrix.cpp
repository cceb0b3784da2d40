#include "awq/fock_matrix.hpp"

#include <cmath>

namespace awq {

int flatten_index(const std::vector<int>& levels, const std::vector<int>& cutoffs) {
  int flat = 0;
  for (size_t m = 0; m < cutoffs.size(); ++m) flat = flat * cutoffs[m] + levels[m];
  return flat;
}

std::vector<int> unflatten_index(int flat, const std::vector<int>& cutoffs) {
  std::vector<int> levels(cutoffs.size());
  for (int m = static_cast<int>(cutoffs.size()) - 1; m >= 0; --m) {
    levels[m] = flat % cutoffs[m];
    flat /= cutoffs[m];
  }
  return levels;
}

OperatorMatrix to_matrix(const LadderExpr& e, const std::vector<int>& cutoffs, double hbar) {
  if (static_cast<int>(cutoffs.size()) != e.modes())
    throw DimensionError("cutoff list does not match mode count");
  for (int c : cutoffs)
    if (c < 1) throw std::invalid_argument("cutoff must be at least 1");

  int dim = 1;
  for (int c : cutoffs) dim *= c;

  OperatorMatrix out;
  out.cutoffs = cutoffs;
  out.hbar_value = hbar;
  out.entries = Eigen::MatrixXcd::Zero(dim, dim);

  // falling factorial l!/(l-b)!
  auto ffact = [](int l, int b) {
    double v = 1.0;
    for (int j = 0; j < b; ++j) v *= (l - j);
    return v;
  };

  for (const auto& [key, coeff] : e.terms()) {
    bool representable = true;
    for (int m = 0; m < e.modes(); ++m)
      if (key[2 * m] >= cutoffs[m] || key[2 * m + 1] >= cutoffs[m]) representable = false;
    if (!representable) {
      out.warnings.push_back("term with ladder exponents at or beyond the cutoff dropped "
                             "entirely; increase the cutoff");
      continue;
    }
    const std::complex<double> c = coeff.evaluate(hbar);
    for (int col = 0; col < dim; ++col) {
      std::vector<int> levels = unflatten_index(col, cutoffs);
      double amp2 = 1.0;  // squared amplitude; one sqrt keeps integers exact
      bool ok = true;
      std::vector<int> target(levels);
      for (int m = 0; m < e.modes(); ++m) {
        const int cr = key[2 * m], an = key[2 * m + 1];
        if (levels[m] < an) { ok = false; break; }
        const int t = levels[m] - an + cr;
        if (t >= cutoffs[m]) { ok = false; break; }
        amp2 *= ffact(levels[m], an) * ffact(t, cr);
        target[m] = t;
      }
      if (!ok) continue;
      out.entries(flatten_index(target, cutoffs), col) += c * std::sqrt(amp2);
    }
  }
  return out;
}

}  // namespace awq
