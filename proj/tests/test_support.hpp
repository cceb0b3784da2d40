#pragma once

#include <complex>
#include <random>

#include "awq/symbol.hpp"

namespace awq::testing {

/// Small-rational coefficients keep exact arithmetic cheap and failures
/// reproducible.
inline Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  return Rational(num(rng), den(rng));
}

inline CRational random_crational(std::mt19937_64& rng) {
  return CRational(random_rational(rng), random_rational(rng));
}

inline Coefficient random_coefficient(std::mt19937_64& rng, bool allow_hbar = true) {
  std::uniform_int_distribution<int> pw(0, allow_hbar ? 2 : 0);
  return Coefficient::monomial(random_crational(rng), 2 * pw(rng));
}

inline PhaseSymbol random_symbol(std::mt19937_64& rng, int modes, int max_degree,
                                 int n_terms = 4) {
  PhaseSymbol f(modes);
  std::uniform_int_distribution<int> expo(0, max_degree);
  for (int t = 0; t < n_terms; ++t) {
    Exponents e(2 * modes, 0);
    for (int m = 0; m < modes; ++m) {
      int j = expo(rng);
      int k = std::uniform_int_distribution<int>(0, max_degree - j)(rng);
      e[2 * m] = j;
      e[2 * m + 1] = k;
    }
    f.add_term(e, random_coefficient(rng));
  }
  return f;
}

/// Random real-valued symbol: c * a^j ac^k + conj(c) * a^k ac^j.
inline PhaseSymbol random_real_symbol(std::mt19937_64& rng, int modes, int max_degree,
                                      int n_terms = 3) {
  PhaseSymbol f = random_symbol(rng, modes, max_degree, n_terms);
  return f + f.conjugated();
}

inline std::complex<double> random_point(std::mt19937_64& rng, double radius = 1.5) {
  std::uniform_real_distribution<double> u(-radius, radius);
  return {u(rng), u(rng)};
}

inline std::vector<std::complex<double>> random_points(std::mt19937_64& rng, int n,
                                                       double radius = 1.5) {
  std::vector<std::complex<double>> pts(n);
  for (auto& p : pts) p = random_point(rng, radius);
  return pts;
}

}  // namespace awq::testing
