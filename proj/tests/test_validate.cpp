// Copyright (c) 2026 The rissec Authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <sstream>

#include "rissec/validate.hpp"

using namespace rissec;

TEST_CASE("selftest passes") {
  const ValidationReport report = run_selftest();
  for (const CheckResult& check : report.checks) {
    INFO(check.name, ": ", check.detail);
    CHECK(check.passed);
  }
  CHECK(report.all_passed());
}

TEST_CASE("validation suite passes at reduced scale") {
  const ValidationReport report = run_validation(8, 500, 1);
  for (const CheckResult& check : report.checks) {
    INFO(check.name, ": ", check.detail);
    CHECK(check.passed);
  }
}

TEST_CASE("report printing marks failures") {
  ValidationReport report;
  report.checks.push_back({"good", true, ""});
  report.checks.push_back({"bad", false, "seed=9"});
  CHECK_FALSE(report.all_passed());
  std::ostringstream out;
  print_report(report, out);
  CHECK(out.str().find("[PASS] good") != std::string::npos);
  CHECK(out.str().find("[FAIL] bad - seed=9") != std::string::npos);
  CHECK(out.str().find("1/2") != std::string::npos);
}
