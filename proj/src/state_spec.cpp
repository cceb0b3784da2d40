#include "awq/state_spec.hpp"

#include <cmath>
#include <complex>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace awq {

namespace {

struct StateSpecError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  for (size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

double parse_number(const std::string& s) {
  size_t used = 0;
  double v = std::stod(s, &used);
  if (used != s.size()) throw StateSpecError("malformed number in state literal: " + s);
  return v;
}

std::complex<double> parse_weight(const std::string& s) {
  if (!s.empty() && s.front() == '(' && s.back() == ')') {
    auto parts = split(s.substr(1, s.size() - 2), ',');
    if (parts.size() != 2) throw StateSpecError("complex weight needs (re,im): " + s);
    return {parse_number(parts[0]), parse_number(parts[1])};
  }
  return {parse_number(s), 0.0};
}

/// One per-mode component before truncation decisions.
struct ModeComponent {
  std::complex<double> weight{1.0, 0.0};
  enum class Kind { Vacuum, Fock, Coherent } kind = Kind::Vacuum;
  int level = 0;
  std::complex<double> alpha{0.0, 0.0};
};

ModeComponent parse_base(const std::string& s) {
  ModeComponent c;
  if (s == "vacuum") {
    c.kind = ModeComponent::Kind::Vacuum;
    return c;
  }
  if (s.rfind("fock:", 0) == 0) {
    c.kind = ModeComponent::Kind::Fock;
    c.level = static_cast<int>(parse_number(s.substr(5)));
    if (c.level < 0) throw StateSpecError("fock level must be nonnegative");
    return c;
  }
  if (s.rfind("coherent:", 0) == 0) {
    c.kind = ModeComponent::Kind::Coherent;
    auto parts = split(s.substr(9), ',');
    if (parts.empty() || parts.size() > 2)
      throw StateSpecError("coherent literal needs re[,im]: " + s);
    c.alpha = {parse_number(parts[0]), parts.size() == 2 ? parse_number(parts[1]) : 0.0};
    return c;
  }
  throw StateSpecError("unknown state literal: " + s);
}

std::vector<ModeComponent> parse_mode(const std::string& s) {
  if (s.rfind("superpose:", 0) == 0) {
    std::vector<ModeComponent> out;
    for (const auto& part : split(s.substr(10), ';')) {
      auto star = part.find('*');
      ModeComponent c;
      if (star == std::string::npos) {
        c = parse_base(part);
      } else {
        c = parse_base(part.substr(star + 1));
        c.weight = parse_weight(part.substr(0, star));
      }
      out.push_back(c);
    }
    if (out.empty()) throw StateSpecError("empty superposition");
    return out;
  }
  return {parse_base(s)};
}

int natural_cutoff(const std::vector<ModeComponent>& comps, double tail_tol) {
  int c = 1;
  for (const auto& comp : comps) {
    switch (comp.kind) {
      case ModeComponent::Kind::Vacuum: c = std::max(c, 1); break;
      case ModeComponent::Kind::Fock: c = std::max(c, comp.level + 1); break;
      case ModeComponent::Kind::Coherent:
        c = std::max(c, adequate_cutoff(std::norm(comp.alpha), tail_tol));
        break;
    }
  }
  return c;
}

Eigen::VectorXcd mode_vector(const std::vector<ModeComponent>& comps, int cutoff,
                             double tail_tol) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(cutoff);
  for (const auto& comp : comps) {
    switch (comp.kind) {
      case ModeComponent::Kind::Vacuum:
        v(0) += comp.weight;
        break;
      case ModeComponent::Kind::Fock:
        if (comp.level >= cutoff)
          throw CutoffError("fock level above the cutoff", comp.level + 1);
        v(comp.level) += comp.weight;
        break;
      case ModeComponent::Kind::Coherent: {
        const double a2 = std::norm(comp.alpha);
        if (coherent_tail_mass(a2, cutoff) >= tail_tol)
          throw CutoffError("coherent tail mass above tolerance for the requested cutoff",
                            adequate_cutoff(a2, tail_tol));
        std::complex<double> term = std::exp(-a2 / 2.0);
        for (int n = 0; n < cutoff; ++n) {
          v(n) += comp.weight * term;
          term *= comp.alpha / std::sqrt(n + 1.0);
        }
        break;
      }
    }
  }
  return v;
}

}  // namespace

FockState build_state(const std::string& spec, const StateSpecOptions& options) {
  if (!spec.empty() && spec.front() == '@') return load_state_file(spec.substr(1));
  const auto mode_specs = split(spec, '|');
  const int modes = static_cast<int>(mode_specs.size());
  if (modes > 3)
    throw StateSpecError("dense tensor states are limited to 3 modes; got " +
                         std::to_string(modes));

  std::vector<std::vector<ModeComponent>> comps(modes);
  bool any_superpose = false;
  for (int m = 0; m < modes; ++m) {
    comps[m] = parse_mode(mode_specs[m]);
    if (comps[m].size() > 1) any_superpose = true;
  }

  std::vector<int> cutoffs(modes);
  for (int m = 0; m < modes; ++m) {
    cutoffs[m] = options.explicit_cutoff > 0
                     ? options.explicit_cutoff
                     : natural_cutoff(comps[m], options.tail_tol) + options.degree_margin;
  }

  std::vector<Eigen::VectorXcd> per_mode(modes);
  for (int m = 0; m < modes; ++m) per_mode[m] = mode_vector(comps[m], cutoffs[m], options.tail_tol);

  int dim = 1;
  for (int c : cutoffs) dim *= c;
  Eigen::VectorXcd v(dim);
  for (int flat = 0; flat < dim; ++flat) {
    auto levels = unflatten_index(flat, cutoffs);
    std::complex<double> prod = 1.0;
    for (int m = 0; m < modes; ++m) prod *= per_mode[m](levels[m]);
    v(flat) = prod;
  }
  FockState psi(modes, cutoffs, std::move(v), options.hbar);
  return any_superpose ? psi.normalized() : psi.norm() == 1.0 ? psi : psi.normalized();
}

std::string state_to_json(const FockState& psi) {
  nlohmann::json j;
  j["modeCount"] = psi.modes();
  j["cutoff"] = psi.cutoffs();
  j["hbar"] = psi.hbar();
  auto& coeffs = j["coefficients"] = nlohmann::json::array();
  for (int i = 0; i < psi.dim(); ++i)
    coeffs.push_back({psi.coefficients()(i).real(), psi.coefficients()(i).imag()});
  return j.dump();
}

FockState state_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  const int modes = j.at("modeCount").get<int>();
  const auto cutoffs = j.at("cutoff").get<std::vector<int>>();
  const double hbar = j.at("hbar").get<double>();
  const auto& coeffs = j.at("coefficients");
  Eigen::VectorXcd v(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i)
    v(static_cast<int>(i)) = {coeffs[i].at(0).get<double>(), coeffs[i].at(1).get<double>()};
  return FockState(modes, cutoffs, std::move(v), hbar);
}

FockState load_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open state file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return state_from_json(buf.str());
}

}  // namespace awq
