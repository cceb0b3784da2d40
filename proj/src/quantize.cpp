#include "awq/quantize.hpp"

#include <map>
#include <mutex>

namespace awq {

std::string to_string(Scheme s) {
  switch (s) {
    case Scheme::Weyl: return "weyl";
    case Scheme::Wick: return "wick";
    case Scheme::AntiWick: return "antiwick";
  }
  return "weyl";
}

Scheme scheme_from_string(const std::string& s) {
  if (s == "weyl") return Scheme::Weyl;
  if (s == "wick") return Scheme::Wick;
  if (s == "antiwick") return Scheme::AntiWick;
  throw std::invalid_argument("unknown scheme: " + s + " (expected weyl|wick|antiwick)");
}

namespace {

// Sum over the distinct interleavings of j X factors and k P factors,
// divided by their count. Single mode; memoized, the cost is factorial in
// j + k.
LadderExpr weyl_xp_monomial(int j, int k) {
  static std::map<std::pair<int, int>, LadderExpr> memo;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find({j, k});
    if (it != memo.end()) return it->second;
  }

  const LadderExpr X = LadderExpr::position(1, 0);
  const LadderExpr P = LadderExpr::momentum(1, 0);
  LadderExpr sum = LadderExpr::zero(1);
  std::int64_t count = 0;

  // depth-first over words with j X's and k P's left to place
  std::vector<bool> word;
  word.reserve(j + k);
  auto emit = [&]() {
    LadderExpr w = LadderExpr::identity(1);
    for (bool is_p : word) w *= is_p ? P : X;
    sum += w;
    ++count;
  };
  auto rec = [&](auto&& self, int xs, int ps) -> void {
    if (xs == 0 && ps == 0) {
      emit();
      return;
    }
    if (xs > 0) {
      word.push_back(false);
      self(self, xs - 1, ps);
      word.pop_back();
    }
    if (ps > 0) {
      word.push_back(true);
      self(self, xs, ps - 1);
      word.pop_back();
    }
  };
  rec(rec, j, k);

  Coefficient inv(Rational(1, count));
  LadderExpr result = inv * sum;
  {
    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(std::make_pair(j, k), result);
  }
  return result;
}

// Embed a single-mode expression at the given mode of an n-mode algebra.
LadderExpr promote(const LadderExpr& single, int mode, int modes) {
  LadderExpr out(modes);
  for (const auto& [e, c] : single.terms()) {
    Exponents key(2 * modes, 0);
    key[2 * mode] = e[0];
    key[2 * mode + 1] = e[1];
    out.add_term(key, c);
  }
  return out;
}

LadderExpr quantize_weyl(const PhaseSymbol& f, int degree_cap) {
  const int modes = f.modes();
  const TermMap xp = to_xp_terms(f);
  for (const auto& [e, c] : xp)
    for (int m = 0; m < modes; ++m)
      if (e[2 * m] + e[2 * m + 1] > degree_cap)
        throw DegreeCapError("Weyl symmetrization beyond the degree cap of " +
                             std::to_string(degree_cap));
  LadderExpr out(modes);
  for (const auto& [e, c] : xp) {
    LadderExpr term = LadderExpr::identity(modes);
    for (int m = 0; m < modes; ++m)
      if (e[2 * m] + e[2 * m + 1] > 0)
        term *= promote(weyl_xp_monomial(e[2 * m], e[2 * m + 1]), m, modes);
    out += c * term;
  }
  return out;
}

}  // namespace

LadderExpr quantize(const PhaseSymbol& f, Scheme scheme, int degree_cap) {
  const int modes = f.modes();
  switch (scheme) {
    case Scheme::AntiWick: {
      LadderExpr out(modes);
      for (const auto& [e, c] : f.terms())
        out += LadderExpr::from_antinormal_monomial(modes, e, c);
      return out;
    }
    case Scheme::Wick: {
      LadderExpr out(modes);
      for (const auto& [e, c] : f.terms()) {
        Exponents key(2 * modes, 0);
        for (int m = 0; m < modes; ++m) {
          key[2 * m] = e[2 * m + 1];  // creation power = ac exponent
          key[2 * m + 1] = e[2 * m];  // annihilation power = a exponent
        }
        out.add_term(key, c);
      }
      return out;
    }
    case Scheme::Weyl:
      return quantize_weyl(f, degree_cap);
  }
  throw std::logic_error("unreachable scheme");
}

PhaseSymbol symbol_of(const LadderExpr& e, Scheme scheme) {
  const int modes = e.modes();
  switch (scheme) {
    case Scheme::AntiWick: {
      PhaseSymbol out(modes);
      for (const auto& [key, c] : antinormal_order_form(e)) out.add_term(key, c);
      return out;
    }
    case Scheme::Wick: {
      PhaseSymbol out(modes);
      for (const auto& [key, c] : e.terms()) {
        Exponents ek(2 * modes, 0);
        for (int m = 0; m < modes; ++m) {
          ek[2 * m] = key[2 * m + 1];
          ek[2 * m + 1] = key[2 * m];
        }
        out.add_term(ek, c);
      }
      return out;
    }
    case Scheme::Weyl: {
      // Solve T(w) = s with s the anti-Wick symbol of E and
      // T = symbol_of(quantize(., Weyl), AntiWick). T differs from the
      // identity by a strictly degree-lowering part, so back-substitution
      // terminates exactly.
      const PhaseSymbol s = symbol_of(e, Scheme::AntiWick);
      PhaseSymbol w = s;
      const int max_iter = s.total_degree() / 2 + 2;
      for (int it = 0; it < max_iter; ++it) {
        PhaseSymbol residual = symbol_of(quantize(w, Scheme::Weyl), Scheme::AntiWick) - s;
        if (residual.is_zero()) return w;
        w -= residual;
      }
      if (symbol_of(quantize(w, Scheme::Weyl), Scheme::AntiWick) == s) return w;
      throw std::logic_error("Weyl symbol extraction did not terminate");
    }
  }
  throw std::logic_error("unreachable scheme");
}

PhaseSymbol convert_scheme(const PhaseSymbol& f, Scheme from, Scheme to, int degree_cap) {
  return symbol_of(quantize(f, from, degree_cap), to);
}

LadderExpr groenewold_residual(const PhaseSymbol& f, const PhaseSymbol& g, int degree_cap) {
  LadderExpr comm = commutator(quantize(f, Scheme::Weyl, degree_cap),
                               quantize(g, Scheme::Weyl, degree_cap));
  // 1/(i hbar) = -2i s^-2
  Coefficient inv_ihbar = Coefficient::monomial(CRational(Rational(0), Rational(-2)), -2);
  return inv_ihbar * comm - quantize(poisson_bracket(f, g), Scheme::Weyl, degree_cap);
}

OperatorMatrix toeplitz_matrix(const PhaseSymbol& f, const QuadratureGrid& grid,
                               const std::vector<int>& cutoffs, double hbar) {
  if (grid.modes() != f.modes()) throw DimensionError("grid dimension does not match symbol");
  if (static_cast<int>(cutoffs.size()) != f.modes())
    throw DimensionError("cutoff list does not match mode count");

  int dim = 1;
  int max_level = 0;
  for (int c : cutoffs) {
    dim *= c;
    max_level = std::max(max_level, c - 1);
  }

  OperatorMatrix out;
  out.cutoffs = cutoffs;
  out.hbar_value = hbar;
  out.entries = Eigen::MatrixXcd::Zero(dim, dim);

  // Matrix elements <t|A|l> = (1/pi^n) int A(a) e^{-|a|^2} a^t ac^l /
  // sqrt(t! l!) d^2a; with Gauss-Hermite nodes in Re/Im per mode the
  // integrand is A times a polynomial of degree t + l.
  const int integrand_degree = f.total_degree() + 2 * max_level;
  if (grid.exact_degree() < integrand_degree)
    out.warnings.push_back("quadrature rule integrates degree " +
                           std::to_string(grid.exact_degree()) + " exactly but the integrand has degree " +
                           std::to_string(integrand_degree) + "; expect divergence from the symbolic route");

  const int modes = f.modes();
  const double inv_pi_n = std::pow(M_PI, -modes);
  std::vector<std::complex<double>> alpha(modes);
  Eigen::VectorXcd phi(dim);

  // 1/sqrt(n!) per level, per mode (cutoffs may differ per mode)
  std::vector<std::vector<double>> inv_sqrt_fact(modes);
  for (int m = 0; m < modes; ++m) {
    inv_sqrt_fact[m].resize(cutoffs[m]);
    double fact = 1.0;
    for (int n = 0; n < cutoffs[m]; ++n) {
      if (n > 0) fact *= n;
      inv_sqrt_fact[m][n] = 1.0 / std::sqrt(fact);
    }
  }

  grid.for_each_node([&](const std::vector<double>& t, double w) {
    for (int m = 0; m < modes; ++m) alpha[m] = {t[2 * m], t[2 * m + 1]};
    const std::complex<double> a_val = evaluate_symbol(f, alpha, hbar);
    // phi_l = prod_m alpha_m^{l_m} / sqrt(l_m!)
    for (int flat = 0; flat < dim; ++flat) {
      std::vector<int> levels = unflatten_index(flat, cutoffs);
      std::complex<double> v = 1.0;
      for (int m = 0; m < modes; ++m) {
        for (int j = 0; j < levels[m]; ++j) v *= alpha[m];
        v *= inv_sqrt_fact[m][levels[m]];
      }
      phi(flat) = v;
    }
    out.entries.noalias() += (w * inv_pi_n * a_val) * (phi * phi.adjoint());
  });
  return out;
}

}  // namespace awq
