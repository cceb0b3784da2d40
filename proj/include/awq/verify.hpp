#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace awq {

struct CheckResult {
  std::string id;
  std::string statement;
  double deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  double wall_ms = 0.0;  // kept out of the canonical serialization
};

struct VerdictReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool overall_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

struct VerifyConfig {
  int central_instances = 100;
  int conversion_instances = 50;
  int groenewold_instances = 50;
  int kernel_points = 20;
  int qfunction_states = 20;
  int qfunction_points = 100;
  int variance_states = 20;
  int quadrature_nodes = 40;
  int kernel_nodes = 60;
  int smoothing_nodes = 32;
  int wigner_nodes = 64;
  int degree_cap = 16;
};

const std::vector<std::string>& suite_names();

/// Executes one named identity suite ("all" chains every suite) with
/// instances drawn deterministically from the seed.
VerdictReport run_suite(const std::string& name, std::uint64_t seed,
                        const VerifyConfig& config = {});

/// Canonical JSON, byte-stable for a fixed seed and config. Wall times are
/// included only on request since they vary run to run.
std::string serialize_report(const VerdictReport& report, bool include_timings = false);

}  // namespace awq
