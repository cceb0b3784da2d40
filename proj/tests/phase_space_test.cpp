#include <doctest.h>

#include <cmath>
#include <random>

#include "awq/parse.hpp"
#include "awq/phase_space.hpp"
#include "test_support.hpp"

using namespace awq;

namespace {

PhaseSymbol parse_xp(const std::string& s) { return parse_symbol(s, 1, VariableConvention::Xp); }

FockState random_state(std::mt19937_64& rng, int levels, int cutoff, double hbar) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(cutoff);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int n = 0; n < levels; ++n) v(n) = std::complex<double>(u(rng), u(rng));
  return FockState(1, {cutoff}, v, hbar).normalized();
}

}  // namespace

TEST_CASE("vacuum Husimi function is the unit Gaussian over pi") {
  auto vac = FockState::vacuum(1, {3}, 1.0);
  std::mt19937_64 rng(109);
  for (const auto& a : testing::random_points(rng, 10)) {
    const double expected = std::exp(-std::norm(a)) / M_PI;
    CHECK(husimi_q(vac, {a}) == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("coherent Husimi peaks at its center with value 1/pi") {
  const std::complex<double> beta{0.8, -0.3};
  auto psi = FockState::coherent({beta}, {adequate_cutoff(std::norm(beta), 1e-15) + 2}, 1.0);
  HusimiDensity q(psi, QConvention::AlphaDensity);
  double best = -1.0;
  std::complex<double> argmax;
  for (double re = -2.0; re <= 2.0; re += 0.1)
    for (double im = -2.0; im <= 2.0; im += 0.1) {
      std::complex<double> a{beta.real() + re, beta.imag() + im};
      const double v = q.value({a});
      CHECK(v >= 0.0);
      CHECK(v <= q.sup_bound() + 1e-12);
      if (v > best) {
        best = v;
        argmax = a;
      }
    }
  CHECK(std::abs(argmax - beta) < 1e-9);
  CHECK(best == doctest::Approx(1.0 / M_PI).epsilon(1e-9));
}

TEST_CASE("Fock |1> Husimi vanishes at the origin") {
  auto one = FockState::fock(1, {1}, {3}, 1.0);
  CHECK(husimi_q(one, {{0.0, 0.0}}) == doctest::Approx(0.0));
}

TEST_CASE("xp density convention carries the (2 hbar)^n bridge") {
  for (double hbar : {0.5, 1.0, 2.0}) {
    auto vac = FockState::vacuum(1, {3}, hbar);
    HusimiDensity qa(vac, QConvention::AlphaDensity);
    HusimiDensity qx(vac, QConvention::XpDensity);
    CHECK(qx.value_xp(0.0, 0.0) ==
          doctest::Approx(1.0 / (2.0 * M_PI * hbar)).epsilon(1e-12));
    CHECK(qa.value({{0.3, 0.1}}) / (2.0 * hbar) ==
          doctest::Approx(qx.value({{0.3, 0.1}})).epsilon(1e-12));
    CHECK(qx.sup_bound() == doctest::Approx(1.0 / (2.0 * M_PI * hbar)));
  }
}

TEST_CASE("far probes on visibly truncated states raise CutoffError") {
  auto psi = random_state(*(new std::mt19937_64(113)), 5, 5, 1.0);
  HusimiDensity sloppy(psi, QConvention::AlphaDensity, /*state_tail=*/1e-2);
  CHECK_NOTHROW(sloppy.value({{0.0, 0.0}}));
  CHECK_THROWS_AS(sloppy.value({{4.0, 0.0}}), CutoffError);
  // default-built states never trip the bound
  HusimiDensity fine(psi, QConvention::AlphaDensity);
  CHECK_NOTHROW(fine.value({{4.0, 0.0}}));
}

TEST_CASE("coherent-overlap and Segal-Bargmann routes agree") {
  std::mt19937_64 rng(127);
  auto points = [&](int n) {
    std::vector<std::vector<std::complex<double>>> pts;
    for (int i = 0; i < n; ++i) pts.push_back({testing::random_point(rng)});
    return pts;
  };
  auto vac = FockState::vacuum(1, {3}, 1.0);
  CHECK(q_equals_sb_check(vac, points(100)) < 1e-12);

  auto one = FockState::fock(1, {1}, {3}, 0.7);
  CHECK(q_equals_sb_check(one, points(100)) < 1e-10);

  for (double hbar : {0.5, 1.0, 2.0}) {
    auto psi = random_state(rng, 5, 8, hbar);
    CHECK(q_equals_sb_check(psi, points(100)) < 1e-9);
  }
}

TEST_CASE("exact Q averages: named examples") {
  auto vac = FockState::vacuum(1, {4}, 1.0);
  CHECK(exact_q_average(parse_xp("1"), vac).real() == doctest::Approx(1.0));
  CHECK(exact_q_average(parse_xp("x^2"), vac).real() == doctest::Approx(1.0).epsilon(1e-12));

  auto coh = FockState::coherent({{1.0, 0.0}}, {25}, 1.0);
  CHECK(exact_q_average(parse_xp("x"), coh).real() ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
}

TEST_CASE("central identity: anti-Wick expectations equal Husimi averages") {
  std::mt19937_64 rng(131);
  const double hbars[] = {0.5, 1.0, 2.0};
  for (int rep = 0; rep < 30; ++rep) {
    const double hbar = hbars[rep % 3];
    PhaseSymbol f = testing::random_symbol(rng, 1, 6);
    FockState psi = random_state(rng, 8, 15, hbar);
    const auto hilbert = expectation(psi, quantize(f, Scheme::AntiWick));
    const auto classical = exact_q_average(f, psi);
    const double rel = std::abs(hilbert - classical) / (1.0 + std::abs(classical));
    CHECK(rel < 1e-9);
  }
}

TEST_CASE("Weyl-route identity uses the converted symbol") {
  std::mt19937_64 rng(137);
  for (int rep = 0; rep < 15; ++rep) {
    const double hbar = (rep % 2) ? 1.0 : 0.5;
    PhaseSymbol f = testing::random_symbol(rng, 1, 5);
    FockState psi = random_state(rng, 7, 14, hbar);
    const auto hilbert = expectation(psi, quantize(f, Scheme::Weyl));
    const auto classical = exact_q_average(convert_scheme(f, Scheme::Weyl, Scheme::AntiWick), psi);
    const double rel = std::abs(hilbert - classical) / (1.0 + std::abs(classical));
    CHECK(rel < 1e-9);
  }
}

TEST_CASE("quadrature averages agree with the exact oracle") {
  QuadratureGrid grid(1, kDefaultQuadratureNodes);

  auto vac = FockState::vacuum(1, {4}, 1.0);
  auto r1 = quadrature_q_average(parse_xp("1"), vac, grid);
  CHECK(r1.exact);
  CHECK(std::abs(r1.value - 1.0) < 1e-12);

  auto r2 = quadrature_q_average(parse_xp("x^2"), vac, grid);
  CHECK(std::abs(r2.value.real() - 1.0) < 1e-10);

  auto one = FockState::fock(1, {1}, {3}, 1.0);
  auto n = parse_symbol("abar*a", 1, VariableConvention::Alpha);
  auto r3 = quadrature_q_average(n, one, grid);
  CHECK(std::abs(r3.value.real() - 2.0) < 1e-9);

  std::mt19937_64 rng(139);
  for (int rep = 0; rep < 5; ++rep) {
    PhaseSymbol f = testing::random_symbol(rng, 1, 4);
    FockState psi = random_state(rng, 6, 9, 1.0);
    auto est = quadrature_q_average(f, psi, grid);
    REQUIRE(est.exact);
    CHECK(std::abs(est.value - exact_q_average(f, psi)) <
          1e-11 * (1.0 + std::abs(est.value)));
  }

  QuadratureGrid tiny(1, 3);
  auto warned = quadrature_q_average(parse_xp("x^4"), random_state(rng, 6, 9, 1.0), tiny);
  CHECK_FALSE(warned.exact);
  CHECK_FALSE(warned.warning.empty());
}

TEST_CASE("reproducing kernel returns function values") {
  QuadratureGrid grid(1, 60);

  // constant function
  SBFunction one(1, {1}, Eigen::VectorXcd::Ones(1), 1.0);
  CHECK(std::abs(reproducing_apply(one, {{0.4, -1.1}}, grid) - 1.0) < 1e-10);

  // F(w) = w at hbar = 1
  Eigen::VectorXcd c1 = Eigen::VectorXcd::Zero(3);
  c1(1) = 1.0;
  SBFunction fw(1, {3}, c1, 1.0);
  const std::complex<double> z{1.0, 1.0};
  CHECK(std::abs(reproducing_apply(fw, {z}, grid) - z) < 1e-8);

  // F(w) = w^2 at z = 2
  Eigen::VectorXcd c2 = Eigen::VectorXcd::Zero(4);
  c2(2) = std::sqrt(2.0);  // sqrt(2! hbar^2) at hbar = 1
  SBFunction fw2(1, {4}, c2, 1.0);
  CHECK(std::abs(reproducing_apply(fw2, {{2.0, 0.0}}, grid) - 4.0) < 1e-7);

  // monomials w^n for several hbar
  std::mt19937_64 rng(149);
  for (double hbar : {0.5, 1.0, 2.0}) {
    for (int n = 0; n <= 6; ++n) {
      Eigen::VectorXcd c = Eigen::VectorXcd::Zero(n + 1);
      double fact = 1.0;
      for (int j = 2; j <= n; ++j) fact *= j;
      c(n) = std::sqrt(fact * std::pow(hbar, n));
      SBFunction f(1, {n + 1}, c, hbar);
      for (int rep = 0; rep < 3; ++rep) {
        const auto zz = testing::random_point(rng, 1.5 * std::sqrt(hbar));
        const auto got = reproducing_apply(f, {zz}, grid);
        const auto expected = std::pow(zz, n);
        CHECK(std::abs(got - expected) <= 1e-7 * (1.0 + std::abs(expected)));
      }
    }
  }
}

TEST_CASE("Wigner function values") {
  auto vac = FockState::vacuum(1, {3}, 1.0);
  CHECK(wigner(vac, 0.0, 0.0) == doctest::Approx(1.0 / M_PI).epsilon(1e-8));
  CHECK(wigner(vac, 3.0, 0.0) ==
        doctest::Approx(std::exp(-9.0) / M_PI).epsilon(1e-6));

  auto one = FockState::fock(1, {1}, {3}, 1.0);
  CHECK(wigner(one, 0.0, 0.0) == doctest::Approx(-1.0 / M_PI).epsilon(1e-7));
}

TEST_CASE("Weierstrass smoothing of the Wigner function recovers Q") {
  QuadratureGrid grid(1, kDefaultSmoothingNodes);

  auto vac = FockState::vacuum(1, {3}, 1.0);
  CHECK(std::abs(weierstrass_smooth(vac, 0.0, 0.0, grid) - 1.0 / (2.0 * M_PI)) < 1e-4);

  auto one = FockState::fock(1, {1}, {3}, 1.0);
  CHECK(std::abs(weierstrass_smooth(one, 0.0, 0.0, grid)) < 1e-4);

  std::mt19937_64 rng(151);
  auto psi = random_state(rng, 4, 6, 1.0);
  HusimiDensity q(psi, QConvention::XpDensity);
  for (double x = -2.0; x <= 2.01; x += 1.0)
    for (double p = -2.0; p <= 2.01; p += 1.0)
      CHECK(std::abs(weierstrass_smooth(psi, x, p, grid) - q.value_xp(x, p)) < 1e-4);
}

TEST_CASE("Q marginal in x is broader than the Born density") {
  auto vac = FockState::vacuum(1, {3}, 1.0);
  QuadratureGrid grid(1, kDefaultQuadratureNodes);

  // trapezoid in x is plenty for these Gaussian-decay integrands
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
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(second == doctest::Approx(1.0).epsilon(1e-6));       // variance hbar
  CHECK(born_second == doctest::Approx(0.5).epsilon(1e-6));  // variance hbar/2
  CHECK(sup_gap > 0.05);
}

TEST_CASE("variance report shows the anti-Wick inflation") {
  auto coh = FockState::coherent({{0.6, 0.2}}, {16}, 1.0);
  auto weyl = variance_report(coh, Scheme::Weyl);
  CHECK(weyl.var_x == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(weyl.var_p == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(weyl.product == doctest::Approx(0.25).epsilon(1e-9));

  auto aw = variance_report(coh, Scheme::AntiWick);
  CHECK(aw.var_x == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(aw.var_p == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(aw.product == doctest::Approx(1.0).epsilon(1e-9));

  auto one = FockState::fock(1, {1}, {6}, 1.0);
  auto w1 = variance_report(one, Scheme::Weyl);
  auto a1 = variance_report(one, Scheme::AntiWick);
  CHECK(a1.var_x - w1.var_x == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(a1.var_p - w1.var_p == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(a1.product > w1.product);
}

TEST_CASE("central identity holds on two-mode states") {
  std::mt19937_64 rng(157);
  for (int rep = 0; rep < 6; ++rep) {
    const double hbar = (rep % 2) ? 1.0 : 0.5;
    PhaseSymbol f = testing::random_symbol(rng, 2, 3);
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(36);  // cutoff 6 per mode
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 9; ++i)
      v(flatten_index({i / 3, i % 3}, {6, 6})) = std::complex<double>(u(rng), u(rng));
    FockState psi = FockState(2, {6, 6}, v, hbar).normalized();

    const auto hilbert = expectation(psi, quantize(f, Scheme::AntiWick));
    const auto classical = exact_q_average(f, psi);
    CHECK(std::abs(hilbert - classical) / (1.0 + std::abs(classical)) < 1e-9);

    std::vector<std::vector<std::complex<double>>> pts;
    for (int i = 0; i < 20; ++i)
      pts.push_back({testing::random_point(rng), testing::random_point(rng)});
    CHECK(q_equals_sb_check(psi, pts) < 1e-9);
  }
}

TEST_CASE("two-mode Toeplitz quadrature resolves the identity") {
  QuadratureGrid grid(2, 12);
  PhaseSymbol one = PhaseSymbol::constant(2, Coefficient::one());
  auto m = toeplitz_matrix(one, grid, std::vector<int>{3, 3}, 1.0);
  CHECK((m.entries - Eigen::MatrixXcd::Identity(9, 9)).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("two-mode quadrature averages match the exact oracle") {
  std::mt19937_64 rng(163);
  QuadratureGrid grid(2, 12);
  PhaseSymbol f = testing::random_symbol(rng, 2, 2);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(16);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 6; ++i)
    v(flatten_index({i / 2, i % 2}, {4, 4})) = std::complex<double>(u(rng), u(rng));
  FockState psi = FockState(2, {4, 4}, v, 2.0).normalized();
  auto est = quadrature_q_average(f, psi, grid);
  REQUIRE(est.exact);
  CHECK(std::abs(est.value - exact_q_average(f, psi)) < 1e-10);
}
