#pragma once

#include <string>

#include "awq/fock.hpp"

namespace awq {

struct StateSpecOptions {
  double hbar = 1.0;
  /// 0 selects the automatic cutoff (smallest adequate + degree_margin).
  int explicit_cutoff = 0;
  /// Extra levels reserved for operator application on top of the state's
  /// own occupation.
  int degree_margin = 0;
  double tail_tol = kDefaultTailTolerance;
};

/// State literals, one spec per mode joined by '|':
///   vacuum
///   fock:n
///   coherent:re[,im]
///   superpose:w*item;w*item;...   w = real or (re,im), items as above
/// "@path" loads a JSON state file instead. The result is normalized.
FockState build_state(const std::string& spec, const StateSpecOptions& options);

/// JSON form: {"modeCount": n, "cutoff": [..], "hbar": h,
///             "coefficients": [[re, im], ...]} with the coefficient array
/// flattened row-major (mode 0 slowest).
std::string state_to_json(const FockState& psi);
FockState state_from_json(const std::string& text);
FockState load_state_file(const std::string& path);

}  // namespace awq
