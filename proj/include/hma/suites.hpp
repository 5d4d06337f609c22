#pragma once

/// \file suites.hpp
/// Constructed instances for every verification principle. Valid instances satisfy the
/// hypotheses by construction; broken ones violate exactly one hypothesis.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hma/principles.hpp"

namespace hma {

struct SuiteOptions {
  double R = 1.0;
  /// Nodes per axis, passed to QuadratureSpec::from_resolution.
  int resolution = 64;
  std::uint64_t seed = kDefaultSeed;
  /// Run the broken instances instead of the valid ones.
  bool broken = false;
};

struct SuiteCase {
  std::string label;
  std::function<VerificationReport()> run;
};

struct SuiteRun {
  std::string suite;
  std::vector<std::string> labels;
  std::vector<VerificationReport> reports;
};

/// Suite names accepted by suite_cases, in run order ("all" is not a suite).
const std::vector<std::string>& suite_names();

bool is_suite_name(const std::string& name);

std::vector<SuiteCase> suite_cases(const std::string& suite, const SuiteOptions& options);

/// Runs the cases concurrently and stores reports by case index.
SuiteRun run_suite(const std::string& suite, const SuiteOptions& options);

/// 0 when every report passes, 3 if any conclusion failed, otherwise 2.
int exit_code(const std::vector<VerificationReport>& reports);

}  // namespace hma
