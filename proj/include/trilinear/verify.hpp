#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trilinear/tensor_io.hpp"

namespace trilinear {

/// involution, schur, cohomology, cremona, en.
const std::vector<std::string>& suite_names();

struct SuiteResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  /// Random draws rejected by a genericity gate before the check ran.
  std::size_t resampled = 0;
  std::optional<std::string> first_counterexample;
  Json detail = Json::object();

  bool ok() const { return failed == 0; }
  Json to_json() const;
};

/// Runs one suite over `trials` instances drawn from mt19937_64(seed) plus
/// the fixtures the suite applies to.
SuiteResult run_suite(const std::string& name, std::size_t trials, std::uint64_t seed);

struct VerifyResult {
  Json report;
  int exit_code = 0;
};

/// Throws InputError for unknown suite names; "all" runs every suite.
VerifyResult verify(const std::string& suite, std::size_t trials, std::uint64_t seed);

}  // namespace trilinear
