#include <CLI11.hpp>
#include <charconv>
#include <complex>
#include <fstream>
#include <iostream>

#include "awq/parse.hpp"
#include "awq/phase_space.hpp"
#include "awq/print.hpp"
#include "awq/state_spec.hpp"
#include "awq/verify.hpp"

namespace {

using namespace awq;

// locale-independent shortest round-trip formatting
std::string fmt(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string fmt(std::complex<double> v) {
  std::string s = fmt(v.real());
  if (v.imag() != 0.0) {
    s += (v.imag() > 0 ? " + " : " - ") + fmt(std::abs(v.imag())) + "i";
  }
  return s;
}

std::string json_escape(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

struct Options {
  double hbar = 1.0;
  int cutoff = 0;  // 0 = automatic
  int nodes = kDefaultQuadratureNodes;
  int degree_cap = kDefaultDegreeCap;
  std::string format = "pretty";
  std::uint64_t seed = 0;
  std::string out_path;
};

std::ostream& open_output(const Options& opt, std::ofstream& file) {
  if (opt.out_path.empty()) return std::cout;
  file.open(opt.out_path);
  if (!file) throw std::runtime_error("cannot open output file: " + opt.out_path);
  return file;
}

int run_quantize(const Options& opt, const std::string& expr, const std::string& scheme_name,
                 const std::string& conv_name, const std::string& as_symbol,
                 std::string print_conv_name) {
  const VariableConvention conv = convention_from_string(conv_name);
  const Scheme scheme = scheme_from_string(scheme_name);
  const int modes = scan_mode_count(expr);
  const PhaseSymbol f = parse_symbol(expr, modes, conv, opt.degree_cap);
  const LadderExpr op = quantize(f, scheme, opt.degree_cap);

  if (print_conv_name.empty()) print_conv_name = conv_name;
  std::string symbol_text, operator_text = print_ladder(op);
  if (!as_symbol.empty()) {
    const PhaseSymbol sym = symbol_of(op, scheme_from_string(as_symbol));
    symbol_text = print_symbol(sym, convention_from_string(print_conv_name));
  }

  std::ofstream file;
  std::ostream& os = open_output(opt, file);
  if (opt.format == "json") {
    os << "{\"expression\": " << json_escape(expr) << ", \"scheme\": " << json_escape(scheme_name)
       << ", \"operator\": " << json_escape(operator_text);
    if (!as_symbol.empty())
      os << ", \"symbol_scheme\": " << json_escape(as_symbol)
         << ", \"symbol\": " << json_escape(symbol_text);
    os << "}\n";
  } else {
    if (!as_symbol.empty())
      os << symbol_text << "\n";
    else
      os << operator_text << "\n";
  }
  return 0;
}

int run_expect(const Options& opt, const std::string& expr, const std::string& scheme_name,
               const std::string& state_spec, const std::string& conv_name) {
  const Scheme scheme = scheme_from_string(scheme_name);
  const int modes = scan_mode_count(expr);
  const PhaseSymbol f =
      parse_symbol(expr, modes, convention_from_string(conv_name), opt.degree_cap);
  const LadderExpr op = quantize(f, scheme, opt.degree_cap);

  StateSpecOptions sopt;
  sopt.hbar = opt.hbar;
  sopt.explicit_cutoff = opt.cutoff;
  for (int m = 0; m < modes; ++m) sopt.degree_margin = std::max(sopt.degree_margin, op.degree(m));
  const FockState psi = build_state(state_spec, sopt);
  if (psi.modes() != modes)
    throw std::invalid_argument("state has " + std::to_string(psi.modes()) +
                                " mode(s) but the expression uses " + std::to_string(modes));

  const ExpectationResult hilbert = expectation_report(psi, op);
  const PhaseSymbol q_symbol = (scheme == Scheme::AntiWick)
                                   ? f
                                   : convert_scheme(f, scheme, Scheme::AntiWick, opt.degree_cap);
  const std::complex<double> classical = exact_q_average(q_symbol, psi);
  const double deviation = std::abs(hilbert.value - classical);

  if (!hilbert.margin_ok) std::cerr << "warning: " << hilbert.warning << "\n";

  std::ofstream file;
  std::ostream& os = open_output(opt, file);
  if (opt.format == "json") {
    os << "{\"hilbert\": [" << fmt(hilbert.value.real()) << ", " << fmt(hilbert.value.imag())
       << "], \"q_average\": [" << fmt(classical.real()) << ", " << fmt(classical.imag())
       << "], \"deviation\": " << fmt(deviation) << "}\n";
  } else if (opt.format == "csv") {
    os << "hilbert_re,hilbert_im,q_average_re,q_average_im,deviation\n"
       << fmt(hilbert.value.real()) << "," << fmt(hilbert.value.imag()) << ","
       << fmt(classical.real()) << "," << fmt(classical.imag()) << "," << fmt(deviation) << "\n";
  } else {
    os << "hilbert route:   " << fmt(hilbert.value) << "\n";
    os << "q-average route: " << fmt(classical) << "\n";
    os << "deviation:       " << fmt(deviation) << "\n";
  }
  return 0;
}

struct GridSpec {
  int nx = 41, np = 41;
  double xmax = 0.0, pmax = 0.0;  // 0 = default 4 sqrt(hbar)
};

GridSpec parse_grid_spec(const std::string& s) {
  GridSpec g;
  if (s.empty()) return g;
  std::vector<double> vals;
  size_t start = 0;
  while (start <= s.size()) {
    size_t comma = s.find(',', start);
    if (comma == std::string::npos) comma = s.size();
    vals.push_back(std::stod(s.substr(start, comma - start)));
    start = comma + 1;
  }
  if (vals.size() != 4) throw std::invalid_argument("grid spec must be nx,np,xmax,pmax");
  g.nx = static_cast<int>(vals[0]);
  g.np = static_cast<int>(vals[1]);
  g.xmax = vals[2];
  g.pmax = vals[3];
  if (g.nx < 2 || g.np < 2 || g.xmax <= 0 || g.pmax <= 0)
    throw std::invalid_argument("grid spec must be positive with at least two points per axis");
  return g;
}

int run_qgrid(const Options& opt, const std::string& state_spec, const std::string& grid_spec) {
  StateSpecOptions sopt;
  sopt.hbar = opt.hbar;
  sopt.explicit_cutoff = opt.cutoff;
  const FockState psi = build_state(state_spec, sopt);
  if (psi.modes() != 1)
    throw std::invalid_argument("qgrid dumps are single mode (Wigner columns)");

  GridSpec g = parse_grid_spec(grid_spec);
  const double span = 4.0 * std::sqrt(opt.hbar);
  if (g.xmax == 0.0) g.xmax = span;
  if (g.pmax == 0.0) g.pmax = span;

  const HusimiDensity q(psi, QConvention::XpDensity);
  const QuadratureGrid smoothing(1, kDefaultSmoothingNodes);

  std::vector<double> xs(g.nx), ps(g.np);
  for (int i = 0; i < g.nx; ++i) xs[i] = -g.xmax + 2.0 * g.xmax * i / (g.nx - 1);
  for (int j = 0; j < g.np; ++j) ps[j] = -g.pmax + 2.0 * g.pmax * j / (g.np - 1);

  std::ofstream file;
  std::ostream& os = open_output(opt, file);
  if (opt.format == "json") {
    std::string qv, wv, sv, xv, pv;
    for (int i = 0; i < g.nx; ++i)
      for (int j = 0; j < g.np; ++j) {
        const double x = xs[i], p = ps[j];
        if (!qv.empty()) {
          qv += ", ";
          wv += ", ";
          sv += ", ";
          xv += ", ";
          pv += ", ";
        }
        xv += fmt(x);
        pv += fmt(p);
        qv += fmt(q.value_xp(x, p));
        wv += fmt(wigner(psi, x, p));
        sv += fmt(weierstrass_smooth(psi, x, p, smoothing));
      }
    os << "{\"x\": [" << xv << "], \"p\": [" << pv << "], \"Q\": [" << qv << "], \"W\": [" << wv
       << "], \"smoothedW\": [" << sv << "]}\n";
  } else {
    os << "x,p,Q,W,smoothedW\n";
    for (int i = 0; i < g.nx; ++i)
      for (int j = 0; j < g.np; ++j) {
        const double x = xs[i], p = ps[j];
        os << fmt(x) << "," << fmt(p) << "," << fmt(q.value_xp(x, p)) << ","
           << fmt(wigner(psi, x, p)) << "," << fmt(weierstrass_smooth(psi, x, p, smoothing))
           << "\n";
      }
  }
  return 0;
}

int run_marginal(const Options& opt, const std::string& state_spec,
                 const std::string& grid_spec) {
  StateSpecOptions sopt;
  sopt.hbar = opt.hbar;
  sopt.explicit_cutoff = opt.cutoff;
  const FockState psi = build_state(state_spec, sopt);
  if (psi.modes() != 1) throw std::invalid_argument("marginal dumps are single mode");

  int nx = 201;
  double xmax = 4.0 * std::sqrt(opt.hbar);
  if (!grid_spec.empty()) {
    const auto comma = grid_spec.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("marginal grid spec must be nx,xmax");
    nx = std::stoi(grid_spec.substr(0, comma));
    xmax = std::stod(grid_spec.substr(comma + 1));
    if (nx < 2 || xmax <= 0) throw std::invalid_argument("marginal grid spec must be positive");
  }

  const QuadratureGrid grid(1, opt.nodes);
  std::ofstream file;
  std::ostream& os = open_output(opt, file);
  if (opt.format == "json") {
    std::string xv, qv, bv;
    for (int i = 0; i < nx; ++i) {
      const double x = -xmax + 2.0 * xmax * i / (nx - 1);
      if (!xv.empty()) {
        xv += ", ";
        qv += ", ";
        bv += ", ";
      }
      xv += fmt(x);
      qv += fmt(q_marginal_x(psi, x, grid));
      bv += fmt(std::norm(position_wavefunction(psi, x)));
    }
    os << "{\"x\": [" << xv << "], \"qmarg\": [" << qv << "], \"born\": [" << bv << "]}\n";
  } else {
    os << "x,qmarg,born\n";
    for (int i = 0; i < nx; ++i) {
      const double x = -xmax + 2.0 * xmax * i / (nx - 1);
      os << fmt(x) << "," << fmt(q_marginal_x(psi, x, grid)) << ","
         << fmt(std::norm(position_wavefunction(psi, x))) << "\n";
    }
  }
  return 0;
}

int run_verify(const Options& opt, const std::string& suite, bool timings) {
  VerifyConfig cfg;
  cfg.quadrature_nodes = opt.nodes;
  cfg.degree_cap = opt.degree_cap;
  VerdictReport report;
  try {
    report = run_suite(suite, opt.seed, cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cerr << "usage: awq verify <suite> [--seed N]\n       suites:";
    for (const auto& n : suite_names()) std::cerr << " " << n;
    std::cerr << "\n";
    return 2;
  }
  std::ofstream file;
  std::ostream& os = open_output(opt, file);
  os << serialize_report(report, timings);
  return report.overall_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"awq -- Weyl / Wick / anti-Wick quantization workbench"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--hbar", opt.hbar, "Value substituted for hbar")->check(CLI::PositiveNumber);
  app.add_option("--cutoff", opt.cutoff, "Explicit Fock cutoff (0 = automatic)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--nodes", opt.nodes, "Gauss-Hermite nodes per dimension")
      ->check(CLI::PositiveNumber);
  app.add_option("--degree-cap", opt.degree_cap, "Per-mode polynomial degree cap")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"pretty", "json", "csv"}));
  app.add_option("--seed", opt.seed, "Random seed for verification suites");
  app.add_option("--out", opt.out_path, "Write output to a file instead of stdout");
  app.set_config("--config", "", "Flat key=value configuration file");
  app.allow_config_extras(false);

  std::string expr, scheme = "antiwick", convention = "xp", as_symbol, print_convention;
  std::string state_spec = "vacuum", grid_spec, suite = "all";
  bool timings = false;

  auto* cmd_quantize = app.add_subcommand("quantize", "Promote a phase-space polynomial");
  cmd_quantize->add_option("expression", expr, "Observable in the expression grammar")
      ->required();
  cmd_quantize->add_option("--scheme", scheme, "weyl|wick|antiwick");
  cmd_quantize->add_option("--convention", convention, "xp|alpha|paperz");
  cmd_quantize->add_option("--as-symbol", as_symbol,
                           "Print the symbol of the operator under this scheme");
  cmd_quantize->add_option("--print-convention", print_convention,
                           "Variable convention for symbol output (defaults to input)");

  auto* cmd_expect = app.add_subcommand("expect", "Expectation value through both routes");
  cmd_expect->add_option("expression", expr, "Observable in the expression grammar")->required();
  cmd_expect->add_option("--scheme", scheme, "weyl|wick|antiwick");
  cmd_expect->add_option("--convention", convention, "xp|alpha|paperz");
  cmd_expect->add_option("--state", state_spec, "State literal");

  auto* cmd_qgrid = app.add_subcommand("qgrid", "Dump Q / Wigner / smoothed Wigner on a grid");
  cmd_qgrid->add_option("--state", state_spec, "State literal");
  cmd_qgrid->add_option("--grid", grid_spec, "nx,np,xmax,pmax (default 41x41 over 4 sqrt(hbar))");

  auto* cmd_marginal = app.add_subcommand("marginal", "Dump the Q x-marginal and Born density");
  cmd_marginal->add_option("--state", state_spec, "State literal");
  cmd_marginal->add_option("--grid", grid_spec, "nx,xmax");

  auto* cmd_verify = app.add_subcommand("verify", "Run a named identity suite");
  cmd_verify->add_option("suite", suite, "Suite name (or 'all')");
  cmd_verify->add_flag("--timings", timings, "Include wall times in the report");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_quantize->parsed())
      return run_quantize(opt, expr, scheme, convention, as_symbol, print_convention);
    if (cmd_expect->parsed()) return run_expect(opt, expr, scheme, state_spec, convention);
    if (cmd_qgrid->parsed()) return run_qgrid(opt, state_spec, grid_spec);
    if (cmd_marginal->parsed()) return run_marginal(opt, state_spec, grid_spec);
    if (cmd_verify->parsed()) return run_verify(opt, suite, timings);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
