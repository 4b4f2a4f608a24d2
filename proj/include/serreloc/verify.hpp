#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "serreloc/io.hpp"

namespace serreloc {

struct CheckResult {
  std::string id;       ///< property checked, e.g. "frame.cha_laws"
  std::string subject;  ///< fixture or input family
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  int dim_bound = 4;
  unsigned seed = 20240601;
  int random_posets = 200;
  std::size_t random_max_size = 7;
};

/// Violations of distributivity, of infinite distributivity over every subfamily, and of the
/// Heyting adjunction. Throws SizeError above 16 elements.
std::size_t cha_law_violations(const Frame& frame);

/// Runs every property suite over the fixtures and over seeded random posets.
std::vector<CheckResult> run_verify_suite(const std::vector<Fixture>& fixtures, const VerifyOptions& options);

Json verify_report(const std::vector<CheckResult>& results);

}  // namespace serreloc
