#include <doctest.h>

#include <stdexcept>

#include "awq/verify.hpp"

using namespace awq;

TEST_CASE("scheme-table suite passes with exact rows") {
  auto report = run_suite("scheme-table", 0);
  CHECK(report.checks.size() == 7);
  for (const auto& c : report.checks) {
    CHECK(c.pass);
    CHECK(c.deviation == 0.0);
  }
  CHECK(report.overall_pass());
}

TEST_CASE("central-identity suite passes at 1e-9") {
  auto report = run_suite("central-identity", 0);
  CHECK(report.overall_pass());
  for (const auto& c : report.checks) CHECK(c.deviation <= c.tolerance);
}

TEST_CASE("groenewold suite flags the cubic obstruction") {
  auto report = run_suite("groenewold", 0);
  CHECK(report.overall_pass());
  bool found = false;
  for (const auto& c : report.checks)
    if (c.id == "groenewold/x3-p3-obstruction") found = c.pass;
  CHECK(found);
}

TEST_CASE("unknown suite names are rejected") {
  CHECK_THROWS_AS(run_suite("nosuch", 0), std::invalid_argument);
}

TEST_CASE("suite list includes all") {
  const auto& names = suite_names();
  CHECK(names.back() == "all");
  CHECK(names.size() == 8);
}

TEST_CASE("reports are byte-deterministic for a fixed seed") {
  auto a = serialize_report(run_suite("kernel", 7));
  auto b = serialize_report(run_suite("kernel", 7));
  CHECK(a == b);
  auto c = serialize_report(run_suite("kernel", 8));
  CHECK(a != c);
}

TEST_CASE("remaining suites pass") {
  for (const char* name : {"kernel", "marginals", "variances"}) {
    auto report = run_suite(name, 0);
    CHECK(report.overall_pass());
  }
}

TEST_CASE("qfunction suite passes") {
  auto report = run_suite("qfunction", 0);
  for (const auto& c : report.checks) {
    INFO(c.id, " deviation ", c.deviation, " tolerance ", c.tolerance);
    CHECK(c.pass);
  }
}
