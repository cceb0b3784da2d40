#pragma once

#include "awq/fock_matrix.hpp"
#include "awq/ladder.hpp"
#include "awq/quadrature.hpp"
#include "awq/symbol.hpp"

namespace awq {

enum class Scheme { Weyl, Wick, AntiWick };

std::string to_string(Scheme s);
Scheme scheme_from_string(const std::string& s);

/// Promote a phase-space polynomial to a normal-ordered operator.
///   AntiWick:  a^j ac^k  ->  a^j (ad)^k
///   Wick:      a^j ac^k  ->  (ad)^k a^j
///   Weyl:      x^j p^k   ->  average of all (j+k)!/(j!k!) distinct
///              interleavings of j X and k P factors
/// All three are exact; Weyl symmetrization is memoized per (j,k).
LadderExpr quantize(const PhaseSymbol& f, Scheme scheme, int degree_cap = kDefaultDegreeCap);

/// Inverse map: the unique polynomial with quantize(symbol_of(E,s), s) == E.
PhaseSymbol symbol_of(const LadderExpr& e, Scheme scheme);

/// symbol_of(quantize(f, from), to); exact.
PhaseSymbol convert_scheme(const PhaseSymbol& f, Scheme from, Scheme to,
                           int degree_cap = kDefaultDegreeCap);

/// (1/i hbar)[Q_W(f), Q_W(g)] - Q_W({f,g}); zero whenever deg f <= 2.
LadderExpr groenewold_residual(const PhaseSymbol& f, const PhaseSymbol& g,
                               int degree_cap = kDefaultDegreeCap);

/// Coherent-projector quadrature of (1/pi^n) int A(a) |a><a| d^2a; an
/// independent numeric route to quantize(f, AntiWick). A warning is
/// attached when the rule cannot integrate the coherent matrix elements
/// exactly for this cutoff.
OperatorMatrix toeplitz_matrix(const PhaseSymbol& f, const QuadratureGrid& grid,
                               const std::vector<int>& cutoffs, double hbar);

inline OperatorMatrix toeplitz_matrix(const PhaseSymbol& f, const QuadratureGrid& grid,
                                      int cutoff, double hbar) {
  return toeplitz_matrix(f, grid, std::vector<int>(f.modes(), cutoff), hbar);
}

}  // namespace awq
