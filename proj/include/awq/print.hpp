#pragma once

#include <string>

#include "awq/parse.hpp"
#include "awq/symbol.hpp"

namespace awq {

class LadderExpr;

/// Deterministic pretty-printer; emits the parse grammar, terms in
/// descending exponent-lexicographic order. Round-trips through
/// parse_symbol under the same convention.
std::string print_symbol(const PhaseSymbol& f, VariableConvention convention);

/// Ladder-operator form with noncommuting tokens 'ad' (creation) and 'a'
/// (annihilation); normal order guaranteed by construction.
std::string print_ladder(const LadderExpr& e);

/// One exact Coefficient in the expression grammar ("3/2*hbar", "i", ...).
std::string print_coefficient(const Coefficient& c);

}  // namespace awq
