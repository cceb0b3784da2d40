#pragma once

#include <string>

#include "awq/symbol.hpp"

namespace awq {

/// Which variable names an expression may use and how they map onto the
/// internal alpha representation:
///   xp     -- x, p      with x = sqrt(2 hbar) Re(alpha), p = sqrt(2 hbar) Im(alpha)
///   alpha  -- a, abar   mapped to alpha, conj(alpha) directly
///   paperz -- z, zbar   mapped via alpha = conj(z); so z -> conj(alpha), zbar -> alpha
/// Numbers, 'i', 'hbar' and 'sqrt(2*hbar)' are accepted everywhere.
enum class VariableConvention { Xp, Alpha, PaperZ };

std::string to_string(VariableConvention c);
VariableConvention convention_from_string(const std::string& s);

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  size_t position;
};

/// Grammar (also emitted by the pretty printer):
///   expr    := ['-'] term (('+'|'-') term)*
///   term    := factor (('*' factor) | ('/' factor))*   -- '/' only by exact constants
///   factor  := base ('^' posint)?
///   base    := number | 'hbar' | 'i' | var | '(' expr ')' | 'sqrt' '(' expr ')'
///   var     := ('x'|'p'|'z'|'zbar'|'a'|'abar') index?    index defaults to 1
///   number  := digits ('.' digits)? | digits '/' digits  -- exact rationals
/// sqrt arguments must be exactly representable (perfect rational squares
/// times even powers of hbar, or odd powers of 2*hbar).
PhaseSymbol parse_symbol(const std::string& text, int mode_count, VariableConvention convention,
                         int degree_cap = kDefaultDegreeCap);

/// Largest variable index appearing in the expression (at least 1);
/// convenience for CLI entry points that infer the mode count.
int scan_mode_count(const std::string& text);

}  // namespace awq
