// Oracle-backed property suites. The acceptance test runs them at full size;
// `selftest` runs the same code with smaller counts.
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace l0::oracle {

struct SuiteSizes {
  std::size_t stratify = 500;
  std::size_t elimination = 500;
  std::size_t helly = 300;  // per tag: this many feasible and this many infeasible
  std::size_t lambda_draws = 1000;
  std::size_t orthogonal = 200;
  std::size_t samplewise = 200;
  std::size_t float_cases = 300;
  std::uint64_t seed = 20240611;

  static SuiteSizes quick() { return {60, 60, 40, 100, 40, 40, 40, 20240611}; }
};

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  double seconds = 0;
  std::string first_failure;
  std::string note;

  bool passed() const { return failures == 0 && cases > 0; }
};

SuiteResult suite_stratification(const SuiteSizes& sizes);
SuiteResult suite_elimination(const SuiteSizes& sizes);
SuiteResult suite_helly(const SuiteSizes& sizes);
SuiteResult suite_orthogonal(const SuiteSizes& sizes);
SuiteResult suite_samplewise(const SuiteSizes& sizes);
SuiteResult suite_float(const SuiteSizes& sizes);

}  // namespace l0::oracle
