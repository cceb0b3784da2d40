#include "awq/verify.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>

#include "awq/parse.hpp"
#include "awq/phase_space.hpp"
#include "awq/state_spec.hpp"

namespace awq {

namespace {

// Deterministic draws built on raw mt19937_64 output so reports do not
// depend on the standard library's distribution implementations.
int rnd_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rational rnd_rational(std::mt19937_64& rng) {
  int num = rnd_int(rng, -9, 9);
  int den = rnd_int(rng, 1, 9);
  return Rational(num, den);
}

CRational rnd_crational(std::mt19937_64& rng) {
  return CRational(rnd_rational(rng), rnd_rational(rng));
}

PhaseSymbol rnd_symbol(std::mt19937_64& rng, int max_degree, int n_terms = 4) {
  PhaseSymbol f(1);
  for (int t = 0; t < n_terms; ++t) {
    const int j = rnd_int(rng, 0, max_degree);
    const int k = rnd_int(rng, 0, max_degree - j);
    f.add_term({j, k}, Coefficient(rnd_crational(rng)));
  }
  return f;
}

PhaseSymbol rnd_xp_symbol(std::mt19937_64& rng, int max_degree, int n_terms = 3) {
  TermMap xp;
  for (int t = 0; t < n_terms; ++t) {
    const int a = rnd_int(rng, 0, max_degree);
    const int b = rnd_int(rng, 0, max_degree - a);
    Exponents e{a, b};
    auto it = xp.find(e);
    Coefficient c(rnd_crational(rng));
    if (it == xp.end())
      xp.emplace(e, c);
    else
      it->second += c;
  }
  return from_xp_terms(1, xp);
}

/// Complex-rational coefficients, then normalized; cutoff leaves room for
/// operators of the given degree.
FockState rnd_state(std::mt19937_64& rng, int levels, int degree_margin, double hbar) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(levels + degree_margin + 1);
  for (int n = 0; n < levels; ++n) {
    const CRational q = rnd_crational(rng);
    v(n) = {q.re.to_double(), q.im.to_double()};
  }
  if (v.norm() == 0.0) v(0) = 1.0;
  return FockState(1, {static_cast<int>(v.size())}, v, hbar).normalized();
}

std::complex<double> rnd_point(std::mt19937_64& rng, double radius = 1.5) {
  const double re = rnd_int(rng, -1000, 1000) / 1000.0 * radius;
  const double im = rnd_int(rng, -1000, 1000) / 1000.0 * radius;
  return {re, im};
}

double hbar_sweep(int i) {
  constexpr double values[] = {0.5, 1.0, 2.0};
  return values[i % 3];
}

using Runner = std::function<void(std::mt19937_64&, const VerifyConfig&,
                                  std::vector<CheckResult>&)>;

CheckResult make_check(const std::string& id, const std::string& statement, double deviation,
                       double tolerance, bool pass) {
  CheckResult c;
  c.id = id;
  c.statement = statement;
  c.deviation = deviation;
  c.tolerance = tolerance;
  c.pass = pass;
  return c;
}

void run_central_identity(std::mt19937_64& rng, const VerifyConfig& cfg,
                          std::vector<CheckResult>& out) {
  double worst = 0.0;
  bool pass = true;
  for (int i = 0; i < cfg.central_instances; ++i) {
    const double hbar = hbar_sweep(i);
    PhaseSymbol f = rnd_symbol(rng, 6);
    FockState psi = rnd_state(rng, 8, 6, hbar);
    const auto hilbert = expectation(psi, quantize(f, Scheme::AntiWick, cfg.degree_cap));
    const auto classical = exact_q_average(f, psi);
    const double rel = std::abs(hilbert - classical) / (1.0 + std::abs(classical));
    worst = std::max(worst, rel);
    if (rel > 1e-9) pass = false;
  }
  out.push_back(make_check(
      "central-identity/antiwick-equals-q-average",
      "anti-Wick expectation values equal phase-space averages against the Husimi density",
      worst, 1e-9, pass));

  worst = 0.0;
  pass = true;
  for (int i = 0; i < cfg.conversion_instances; ++i) {
    const double hbar = hbar_sweep(i);
    PhaseSymbol f = rnd_symbol(rng, 5);
    FockState psi = rnd_state(rng, 7, 5, hbar);
    const auto hilbert = expectation(psi, quantize(f, Scheme::Weyl, cfg.degree_cap));
    const auto classical =
        exact_q_average(convert_scheme(f, Scheme::Weyl, Scheme::AntiWick, cfg.degree_cap), psi);
    const double rel = std::abs(hilbert - classical) / (1.0 + std::abs(classical));
    worst = std::max(worst, rel);
    if (rel > 1e-9) pass = false;
  }
  out.push_back(make_check(
      "central-identity/weyl-route",
      "Weyl expectations equal Husimi averages of the anti-Wick-converted symbol", worst, 1e-9,
      pass));

  // independent quadrature route to the anti-Wick matrix
  QuadratureGrid grid(1, cfg.quadrature_nodes);
  const PhaseSymbol x2 = parse_symbol("x^2", 1, VariableConvention::Xp);
  double dev = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double hbar = hbar_sweep(i);
    auto numeric = toeplitz_matrix(x2, grid, 6, hbar);
    auto symbolic = to_matrix(quantize(x2, Scheme::AntiWick), 6, hbar);
    dev = std::max(dev, (numeric.entries.topLeftCorner(4, 4) -
                         symbolic.entries.topLeftCorner(4, 4))
                            .cwiseAbs()
                            .maxCoeff());
  }
  out.push_back(make_check(
      "central-identity/toeplitz-cross-check",
      "coherent-projector quadrature reproduces the symbolic anti-Wick matrix of x^2", dev, 1e-7,
      dev <= 1e-7));
}

void run_scheme_table(std::mt19937_64&, const VerifyConfig&, std::vector<CheckResult>& out) {
  const PhaseSymbol x2 = parse_symbol("x^2", 1, VariableConvention::Xp);
  const PhaseSymbol p2 = parse_symbol("p^2", 1, VariableConvention::Xp);
  const LadderExpr X = LadderExpr::position(1, 0);
  const LadderExpr P = LadderExpr::momentum(1, 0);
  Coefficient half_h = Coefficient::hbar();
  half_h.scale(Rational(1, 2));
  const LadderExpr shift = half_h * LadderExpr::identity(1);

  struct Row {
    const char* id;
    const char* statement;
    bool ok;
  } rows[] = {
      {"scheme-table/x2-weyl", "x^2 promotes to X^2 under Weyl",
       quantize(x2, Scheme::Weyl) == X * X},
      {"scheme-table/x2-wick", "x^2 promotes to X^2 - hbar/2 under Wick",
       quantize(x2, Scheme::Wick) == X * X - shift},
      {"scheme-table/x2-antiwick", "x^2 promotes to X^2 + hbar/2 under anti-Wick",
       quantize(x2, Scheme::AntiWick) == X * X + shift},
      {"scheme-table/p2-weyl", "p^2 promotes to P^2 under Weyl",
       quantize(p2, Scheme::Weyl) == P * P},
      {"scheme-table/p2-wick", "p^2 promotes to P^2 - hbar/2 under Wick",
       quantize(p2, Scheme::Wick) == P * P - shift},
      {"scheme-table/p2-antiwick", "p^2 promotes to P^2 + hbar/2 under anti-Wick",
       quantize(p2, Scheme::AntiWick) == P * P + shift},
      {"scheme-table/x2-conversion", "the anti-Wick symbol of the Weyl operator of x^2 is "
                                     "x^2 - hbar/2",
       convert_scheme(x2, Scheme::Weyl, Scheme::AntiWick) ==
           parse_symbol("x^2 - hbar/2", 1, VariableConvention::Xp)},
  };
  for (const auto& r : rows)
    out.push_back(make_check(r.id, r.statement, r.ok ? 0.0 : 1.0, 0.0, r.ok));
}

void run_groenewold(std::mt19937_64& rng, const VerifyConfig& cfg,
                    std::vector<CheckResult>& out) {
  bool pass = true;
  int failures = 0;
  for (int i = 0; i < cfg.groenewold_instances; ++i) {
    PhaseSymbol f = rnd_xp_symbol(rng, 2);
    PhaseSymbol g = rnd_xp_symbol(rng, 6);
    if (!groenewold_residual(f, g, cfg.degree_cap).is_zero()) {
      pass = false;
      ++failures;
    }
  }
  out.push_back(make_check(
      "groenewold/degree-2-exact",
      "scaled Weyl commutators reproduce Poisson brackets for degree <= 2 observables",
      static_cast<double>(failures), 0.0, pass));

  const LadderExpr r =
      groenewold_residual(parse_symbol("x^3", 1, VariableConvention::Xp),
                          parse_symbol("p^3", 1, VariableConvention::Xp), cfg.degree_cap);
  bool nonzero = !r.is_zero();
  bool hbar2 = nonzero;
  for (const auto& [key, c] : r.terms())
    if (c.min_s_exponent() < 4) hbar2 = false;
  out.push_back(make_check("groenewold/x3-p3-obstruction",
                           "the (x^3, p^3) residual is nonzero and every coefficient carries "
                           "a factor hbar^2",
                           (nonzero && hbar2) ? 0.0 : 1.0, 0.0, nonzero && hbar2));
}

void run_kernel(std::mt19937_64& rng, const VerifyConfig& cfg, std::vector<CheckResult>& out) {
  QuadratureGrid grid(1, cfg.kernel_nodes);
  double worst = 0.0;
  bool pass = true;
  for (int n = 0; n <= 6; ++n) {
    const double hbar = hbar_sweep(n);
    double fact = 1.0;
    for (int j = 2; j <= n; ++j) fact *= j;
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(n + 1);
    c(n) = std::sqrt(fact * std::pow(hbar, n));
    SBFunction f(1, {n + 1}, c, hbar);
    for (int i = 0; i < cfg.kernel_points; ++i) {
      const auto z = rnd_point(rng, 1.5 * std::sqrt(hbar));
      const auto got = reproducing_apply(f, {z}, grid);
      const auto expected = std::pow(z, n);
      const double rel = std::abs(got - expected) / (1.0 + std::abs(expected));
      worst = std::max(worst, rel);
      if (rel > 1e-7) pass = false;
    }
  }
  out.push_back(make_check("kernel/monomial-reproduction",
                           "the reproducing kernel returns monomial values under quadrature",
                           worst, 1e-7, pass));
}

void run_qfunction(std::mt19937_64& rng, const VerifyConfig& cfg,
                   std::vector<CheckResult>& out) {
  // two evaluation routes to Q
  double worst = 0.0;
  for (int s = 0; s < cfg.qfunction_states; ++s) {
    const double hbar = hbar_sweep(s);
    FockState psi = rnd_state(rng, rnd_int(rng, 1, 8), 0, hbar);
    std::vector<std::vector<std::complex<double>>> pts;
    for (int i = 0; i < cfg.qfunction_points; ++i) pts.push_back({rnd_point(rng)});
    worst = std::max(worst, q_equals_sb_check(psi, pts));
  }
  out.push_back(make_check(
      "qfunction/overlap-equals-sb-route",
      "the coherent-overlap and Segal-Bargmann routes to Q agree pointwise", worst, 1e-9,
      worst <= 1e-9));

  // bound, nonnegativity, and the coherent peak
  bool bound_ok = true;
  double bound_excess = 0.0;
  double peak_dev = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double hbar = hbar_sweep(i);
    const std::complex<double> beta{0.9, -0.4};
    std::vector<FockState> states;
    states.push_back(FockState::vacuum(1, {2}, hbar));
    states.push_back(FockState::fock(1, {1}, {3}, hbar));
    states.push_back(
        FockState::coherent({beta}, {adequate_cutoff(std::norm(beta), 1e-15) + 2}, hbar));
    states.push_back(rnd_state(rng, 6, 0, hbar));
    for (const auto& psi : states) {
      HusimiDensity q(psi, QConvention::XpDensity);
      const double bound = q.sup_bound();
      const double s = std::sqrt(2.0 * hbar);
      for (int gx = -7; gx <= 7; ++gx)
        for (int gp = -7; gp <= 7; ++gp) {
          const double v = q.value_xp(0.5 * s * gx, 0.5 * s * gp);
          if (v < 0.0) bound_ok = false;
          bound_excess = std::max(bound_excess, v - bound);
        }
    }
    HusimiDensity qc(states[2], QConvention::XpDensity);
    const double peak = qc.value({beta});
    peak_dev = std::max(peak_dev,
                        std::abs(peak - 1.0 / (2.0 * M_PI * hbar)) * (2.0 * M_PI * hbar));
  }
  out.push_back(make_check(
      "qfunction/bound-and-positivity",
      "Q is nonnegative and never exceeds (2 pi hbar)^-n in the xp normalization",
      bound_excess, 1e-12, bound_ok && bound_excess <= 1e-12));
  out.push_back(make_check("qfunction/coherent-peak",
                           "a coherent state attains the Q bound at its own center", peak_dev,
                           1e-9, peak_dev <= 1e-9));

  // Wigner closed forms
  const FockState vac = FockState::vacuum(1, {2}, 1.0);
  const FockState one = FockState::fock(1, {1}, {2}, 1.0);
  const double w00 = wigner(vac, 0.0, 0.0, cfg.wigner_nodes);
  const double w30 = wigner(vac, 3.0, 0.0, cfg.wigner_nodes);
  const double wf1 = wigner(one, 0.0, 0.0, cfg.wigner_nodes);
  const double wig_dev = std::max(
      {std::abs(w00 - 1.0 / M_PI), std::abs(w30 - std::exp(-9.0) / M_PI),
       std::abs(wf1 + 1.0 / M_PI)});
  const bool wig_ok = std::abs(w00 - 1.0 / M_PI) <= 1e-8 &&
                      std::abs(w30 - std::exp(-9.0) / M_PI) <= 1e-9 &&
                      std::abs(wf1 + 1.0 / M_PI) <= 1e-6;
  out.push_back(make_check(
      "qfunction/wigner-closed-forms",
      "Wigner values match the vacuum Gaussian and the Fock-1 negativity at the origin",
      wig_dev, 1e-6, wig_ok));

  // smoothing reproduces Q on a grid
  QuadratureGrid sgrid(1, cfg.smoothing_nodes);
  double smooth_dev = 0.0;
  std::vector<FockState> sm_states;
  sm_states.push_back(vac);
  sm_states.push_back(one);
  sm_states.push_back(rnd_state(rng, 4, 0, 1.0));
  for (const auto& psi : sm_states) {
    HusimiDensity q(psi, QConvention::XpDensity);
    for (int gx = -10; gx <= 10; ++gx)
      for (int gp = -10; gp <= 10; ++gp) {
        const double x = 0.4 * gx, p = 0.4 * gp;
        smooth_dev = std::max(
            smooth_dev,
            std::abs(weierstrass_smooth(psi, x, p, sgrid, cfg.wigner_nodes) - q.value_xp(x, p)));
      }
  }
  out.push_back(make_check("qfunction/weierstrass-smoothing",
                           "Gaussian smoothing of the Wigner function reproduces Q on a 21x21 "
                           "grid",
                           smooth_dev, 1e-4, smooth_dev <= 1e-4));
}

void run_marginals(std::mt19937_64&, const VerifyConfig& cfg, std::vector<CheckResult>& out) {
  const FockState vac = FockState::vacuum(1, {2}, 1.0);
  QuadratureGrid grid(1, cfg.quadrature_nodes);
  const double lo = -8.0, hi = 8.0, step = 1.0 / 128.0;
  double mass = 0.0, second = 0.0, born_second = 0.0, sup_gap = 0.0;
  for (double x = lo; x <= hi; x += step) {
    const double m = q_marginal_x(vac, x, grid);
    const double born = std::norm(position_wavefunction(vac, x));
    mass += m * step;
    second += x * x * m * step;
    born_second += x * x * born * step;
    sup_gap = std::max(sup_gap, std::abs(m - born));
  }
  out.push_back(make_check("marginals/normalization",
                           "the Q x-marginal integrates to one", std::abs(mass - 1.0), 1e-8,
                           std::abs(mass - 1.0) <= 1e-8));
  const bool moments_ok =
      std::abs(second - 1.0) <= 1e-4 && std::abs(born_second - 0.5) <= 1e-6;
  out.push_back(make_check(
      "marginals/second-moments",
      "the vacuum Q x-marginal has second moment hbar while the Born density has hbar/2",
      std::max(std::abs(second - 1.0), std::abs(born_second - 0.5)), 1e-4, moments_ok));
  out.push_back(make_check("marginals/sup-gap",
                           "the marginal differs from the Born density in sup norm", sup_gap,
                           0.05, sup_gap > 0.05));
}

void run_variances(std::mt19937_64& rng, const VerifyConfig& cfg,
                   std::vector<CheckResult>& out) {
  double shift_dev = 0.0;
  bool products_ok = true;
  for (int i = 0; i < cfg.variance_states; ++i) {
    const double hbar = hbar_sweep(i);
    FockState psi = rnd_state(rng, rnd_int(rng, 1, 6), 2, hbar);
    const auto weyl = variance_report(psi, Scheme::Weyl);
    const auto aw = variance_report(psi, Scheme::AntiWick);
    shift_dev = std::max({shift_dev, std::abs(aw.var_x - weyl.var_x - hbar / 2.0),
                          std::abs(aw.var_p - weyl.var_p - hbar / 2.0)});
    if (!(aw.product > weyl.product)) products_ok = false;
  }
  out.push_back(make_check(
      "variances/antiwick-shift",
      "anti-Wick variances exceed Weyl variances by exactly hbar/2 per axis", shift_dev, 1e-10,
      shift_dev <= 1e-10));
  out.push_back(make_check("variances/product-inflation",
                           "the anti-Wick variance product exceeds the Weyl product",
                           products_ok ? 0.0 : 1.0, 0.0, products_ok));
}

const std::vector<std::pair<std::string, Runner>>& suite_table() {
  static const std::vector<std::pair<std::string, Runner>> table = {
      {"central-identity", run_central_identity},
      {"scheme-table", run_scheme_table},
      {"groenewold", run_groenewold},
      {"kernel", run_kernel},
      {"qfunction", run_qfunction},
      {"marginals", run_marginals},
      {"variances", run_variances},
  };
  return table;
}

void append_number(std::string& out, double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, res.ptr);
}

void append_json_string(std::string& out, const std::string& s) {
  out += '"';
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : suite_table()) n.push_back(name);
    n.push_back("all");
    return n;
  }();
  return names;
}

VerdictReport run_suite(const std::string& name, std::uint64_t seed,
                        const VerifyConfig& config) {
  VerdictReport report;
  report.suite = name;
  report.seed = seed;

  std::vector<std::pair<std::string, Runner>> selected;
  for (const auto& entry : suite_table())
    if (name == "all" || entry.first == name) selected.push_back(entry);
  if (selected.empty()) throw std::invalid_argument("unknown suite: " + name);

  for (const auto& [suite, runner] : selected) {
    // each sub-suite draws from its own stream so "all" agrees with
    // running the suites individually; FNV-1a keeps the stream choice
    // independent of the standard library
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : suite) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    std::mt19937_64 rng(seed ^ h);
    std::vector<CheckResult> checks;
    const auto t0 = std::chrono::steady_clock::now();
    runner(rng, config, checks);
    const auto t1 = std::chrono::steady_clock::now();
    const double total_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    for (auto& c : checks) c.wall_ms = total_ms / static_cast<double>(checks.size());
    report.checks.insert(report.checks.end(), checks.begin(), checks.end());
  }
  return report;
}

std::string serialize_report(const VerdictReport& report, bool include_timings) {
  std::string out = "{\n  \"suite\": ";
  append_json_string(out, report.suite);
  out += ",\n  \"seed\": " + std::to_string(report.seed);
  out += ",\n  \"checks\": [\n";
  for (size_t i = 0; i < report.checks.size(); ++i) {
    const auto& c = report.checks[i];
    out += "    {\"id\": ";
    append_json_string(out, c.id);
    out += ", \"statement\": ";
    append_json_string(out, c.statement);
    out += ", \"deviation\": ";
    append_number(out, c.deviation);
    out += ", \"tolerance\": ";
    append_number(out, c.tolerance);
    out += ", \"pass\": ";
    out += c.pass ? "true" : "false";
    if (include_timings) {
      out += ", \"wall_ms\": ";
      append_number(out, c.wall_ms);
    }
    out += "}";
    if (i + 1 < report.checks.size()) out += ",";
    out += "\n";
  }
  out += "  ],\n  \"overall_pass\": ";
  out += report.overall_pass() ? "true" : "false";
  out += "\n}\n";
  return out;
}

}  // namespace awq
