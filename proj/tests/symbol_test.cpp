#include <doctest.h>

#include <cmath>

#include "awq/parse.hpp"
#include "awq/print.hpp"
#include "awq/symbol.hpp"
#include "test_support.hpp"

using namespace awq;
using awq::testing::random_points;
using awq::testing::random_real_symbol;
using awq::testing::random_symbol;

namespace {

PhaseSymbol parse_xp(const std::string& s, int modes = 1) {
  return parse_symbol(s, modes, VariableConvention::Xp);
}

}  // namespace

TEST_CASE("rational basics") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK((Rational(2, 3) * Rational(3, 4)) == Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(INT64_MAX) * Rational(3), OverflowError);
}

TEST_CASE("coefficient ring closure and evaluation") {
  Coefficient h = Coefficient::hbar();
  Coefficient s = Coefficient::sqrt2hbar();
  CHECK(s * s == Coefficient(2) * h);
  CHECK(h.conj() == h);
  CHECK((Coefficient::i() * Coefficient::i()) == Coefficient(-1));
  CHECK(h.evaluate(0.25).real() == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(s.evaluate(2.0).real() == doctest::Approx(2.0).epsilon(1e-15));
  // division by s-monomials is exact
  Coefficient q = (Coefficient(3) * h * s) / s;
  CHECK(q == Coefficient(3) * h);
}

TEST_CASE("parse x^2 expands to the exact alpha form") {
  PhaseSymbol f = parse_xp("x^2");
  PhaseSymbol expected(1);
  Coefficient half_h = Coefficient::hbar();
  half_h.scale(Rational(1, 2));
  expected.add_term({2, 0}, half_h);
  expected.add_term({0, 2}, half_h);
  expected.add_term({1, 1}, Coefficient::hbar());
  CHECK(f == expected);

  // cross-check by numeric evaluation at random points
  std::mt19937_64 rng(7);
  for (double hbar : {0.5, 1.0, 2.0}) {
    for (const auto& a : random_points(rng, 10)) {
      double x = std::sqrt(2.0 * hbar) * a.real();
      auto v = evaluate_symbol(f, {a}, hbar);
      CHECK(v.real() == doctest::Approx(x * x).epsilon(1e-12));
      CHECK(v.imag() == doctest::Approx(0.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("classical variables commute") {
  CHECK(parse_xp("x*p - p*x").is_zero());
}

TEST_CASE("paperz convention maps zbar to alpha") {
  PhaseSymbol f = parse_symbol("zbar", 1, VariableConvention::PaperZ);
  CHECK(f == PhaseSymbol::alpha(1, 0, false));
  PhaseSymbol g = parse_symbol("z", 1, VariableConvention::PaperZ);
  CHECK(g == PhaseSymbol::alpha(1, 0, true));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_xp("x +"), ParseError);
  CHECK_THROWS_AS(parse_xp("q^2"), ParseError);
  CHECK_THROWS_AS(parse_xp("x2", 1), ParseError);     // index beyond mode count
  CHECK_THROWS_AS(parse_xp("a"), ParseError);          // alpha var under xp convention
  CHECK_THROWS_AS(parse_xp("x^17"), DegreeCapError);
  CHECK_THROWS_AS(parse_xp("x/p"), ParseError);
  CHECK_NOTHROW(parse_symbol("x^17", 1, VariableConvention::Xp, 20));
}

TEST_CASE("poisson bracket canonical examples") {
  PhaseSymbol x = parse_xp("x"), p = parse_xp("p");
  CHECK(poisson_bracket(x, p) == parse_xp("1"));
  CHECK(poisson_bracket(parse_xp("x^2"), parse_xp("p^2")) == parse_xp("4*x*p"));
  CHECK(poisson_bracket(parse_xp("x^3"), parse_xp("p^3")) == parse_xp("9*x^2*p^2"));
}

TEST_CASE("poisson bracket matches a finite-difference oracle") {
  // d/dx, d/dp by central differences on numerically evaluated symbols.
  std::mt19937_64 rng(11);
  const double hbar = 1.0, h = 1e-5;
  auto eval_xp = [&](const PhaseSymbol& f, double x, double p) {
    const double s = std::sqrt(2.0 * hbar);
    return evaluate_symbol(f, {{x / s, p / s}}, hbar);
  };
  for (int rep = 0; rep < 5; ++rep) {
    PhaseSymbol f = random_symbol(rng, 1, 3);
    PhaseSymbol g = random_symbol(rng, 1, 3);
    PhaseSymbol pb = poisson_bracket(f, g);
    for (int pt = 0; pt < 3; ++pt) {
      double x = testing::random_point(rng).real(), p = testing::random_point(rng).real();
      auto dfx = (eval_xp(f, x + h, p) - eval_xp(f, x - h, p)) / (2 * h);
      auto dfp = (eval_xp(f, x, p + h) - eval_xp(f, x, p - h)) / (2 * h);
      auto dgx = (eval_xp(g, x + h, p) - eval_xp(g, x - h, p)) / (2 * h);
      auto dgp = (eval_xp(g, x, p + h) - eval_xp(g, x, p - h)) / (2 * h);
      auto expected = dfx * dgp - dfp * dgx;
      auto got = eval_xp(pb, x, p);
      CHECK(std::abs(got - expected) < 1e-5 * (1.0 + std::abs(expected)));
    }
  }
}

TEST_CASE("poisson bracket is antisymmetric and satisfies Jacobi") {
  std::mt19937_64 rng(13);
  for (int rep = 0; rep < 8; ++rep) {
    int modes = 1 + (rep % 2);
    PhaseSymbol f = random_symbol(rng, modes, 4);
    PhaseSymbol g = random_symbol(rng, modes, 4);
    PhaseSymbol h = random_symbol(rng, modes, 4);
    CHECK(poisson_bracket(f, g) == -poisson_bracket(g, f));
    PhaseSymbol jacobi = poisson_bracket(f, poisson_bracket(g, h)) +
                         poisson_bracket(g, poisson_bracket(h, f)) +
                         poisson_bracket(h, poisson_bracket(f, g));
    CHECK(jacobi.is_zero());
  }
}

TEST_CASE("gaussian moment integral") {
  CHECK(gaussian_moment_integral(parse_xp("1"), 1.0).real() == doctest::Approx(1.0));
  PhaseSymbol n = parse_symbol("abar*a", 1, VariableConvention::Alpha);
  CHECK(gaussian_moment_integral(n, 1.0).real() == doctest::Approx(1.0));
  PhaseSymbol a2 = parse_symbol("a^2", 1, VariableConvention::Alpha);
  CHECK(std::abs(gaussian_moment_integral(a2, 1.0)) == doctest::Approx(0.0));

  // delta_mn * n! for monomial pairs
  for (int m = 0; m <= 5; ++m)
    for (int k = 0; k <= 5; ++k) {
      PhaseSymbol mono(1);
      mono.add_term({m, k}, Coefficient::one());
      double expected = 0.0;
      if (m == k) {
        expected = 1.0;
        for (int j = 2; j <= m; ++j) expected *= j;
      }
      CHECK(gaussian_moment_integral(mono, 1.0).real() == doctest::Approx(expected));
      CHECK(gaussian_moment_integral(mono, 1.0).imag() == doctest::Approx(0.0));
    }
}

TEST_CASE("gaussian moment integral is linear and real on real symbols") {
  std::mt19937_64 rng(17);
  for (int rep = 0; rep < 6; ++rep) {
    PhaseSymbol f = random_symbol(rng, 1, 4);
    PhaseSymbol g = random_symbol(rng, 1, 4);
    auto lhs = gaussian_moment_integral(f + g, 1.3);
    auto rhs = gaussian_moment_integral(f, 1.3) + gaussian_moment_integral(g, 1.3);
    CHECK(std::abs(lhs - rhs) < 1e-12 * (1.0 + std::abs(rhs)));

    PhaseSymbol r = random_real_symbol(rng, 1, 4);
    CHECK(r.is_real());
    auto v = gaussian_moment_integral(r, 0.7);
    CHECK(std::abs(v.imag()) < 1e-12 * (1.0 + std::abs(v)));
  }
}

TEST_CASE("realness predicate") {
  CHECK(parse_xp("x^2 + p^2").is_real());
  CHECK(parse_xp("x*p").is_real());
  CHECK_FALSE(parse_symbol("i*x", 1, VariableConvention::Xp).is_real());
  CHECK(parse_symbol("a*abar", 1, VariableConvention::Alpha).is_real());
  CHECK_FALSE(parse_symbol("a", 1, VariableConvention::Alpha).is_real());
}

TEST_CASE("evaluation examples") {
  PhaseSymbol a = parse_symbol("a", 1, VariableConvention::Alpha);
  auto v = evaluate_symbol(a, {{2.0, 1.0}}, 1.0);
  CHECK(v.real() == doctest::Approx(2.0));
  CHECK(v.imag() == doctest::Approx(1.0));

  PhaseSymbol x2 = parse_xp("x^2");
  CHECK(evaluate_symbol(x2, {{1.0, 0.0}}, 1.0).real() == doctest::Approx(2.0));

  PhaseSymbol n = parse_symbol("abar*a", 1, VariableConvention::Alpha);
  CHECK(evaluate_symbol(n, {{0.0, 3.0}}, 1.0).real() == doctest::Approx(9.0));

  CHECK_THROWS_AS(evaluate_symbol(x2, {{0.0, 0.0}, {1.0, 0.0}}, 1.0), DimensionError);
}

TEST_CASE("print/parse round trip is the identity on canonical forms") {
  std::mt19937_64 rng(23);
  for (int rep = 0; rep < 20; ++rep) {
    int modes = 1 + (rep % 2);
    PhaseSymbol f = random_symbol(rng, modes, 4);
    for (auto conv :
         {VariableConvention::Xp, VariableConvention::Alpha, VariableConvention::PaperZ}) {
      std::string text = print_symbol(f, conv);
      PhaseSymbol back = parse_symbol(text, modes, conv);
      CHECK(back == f);
    }
  }
  CHECK(print_symbol(PhaseSymbol::zero(1), VariableConvention::Xp) == "0");
}

TEST_CASE("printer emits conventional forms") {
  CHECK(print_symbol(parse_xp("x^2"), VariableConvention::Xp) == "x^2");
  CHECK(print_symbol(parse_xp("x^2 - hbar/2"), VariableConvention::Xp) == "x^2 - hbar/2");
  PhaseSymbol n = parse_symbol("abar*a", 1, VariableConvention::Alpha);
  CHECK(print_symbol(n, VariableConvention::Alpha) == "a*abar");
  // alpha symbols rendered in xp pick up exact sqrt(2*hbar) factors
  PhaseSymbol a = parse_symbol("a", 1, VariableConvention::Alpha);
  std::string xp_form = print_symbol(a, VariableConvention::Xp);
  CHECK(parse_symbol(xp_form, 1, VariableConvention::Xp) == a);
}

TEST_CASE("xp rewrite round trip") {
  std::mt19937_64 rng(29);
  for (int rep = 0; rep < 10; ++rep) {
    int modes = 1 + (rep % 2);
    PhaseSymbol f = random_symbol(rng, modes, 4);
    CHECK(from_xp_terms(modes, to_xp_terms(f)) == f);
  }
}

TEST_CASE("measure density normalizes") {
  GaussianMeasure mu{2.0, 1};
  CHECK(mu.alpha_density({{0.0, 0.0}}) == doctest::Approx(1.0 / M_PI));
  CHECK(mu.z_density({{0.0, 0.0}}) == doctest::Approx(1.0 / (2.0 * M_PI)));
  // unit mass via the moment oracle with the constant symbol
  CHECK(gaussian_moment_integral(PhaseSymbol::constant(1, Coefficient::one()), 2.0).real() ==
        doctest::Approx(1.0));
}
