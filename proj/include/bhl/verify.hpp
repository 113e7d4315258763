#pragma once

// Property suites for the identities behind sigma. Each check is exhaustive
// on small groups and sampled on larger ones.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bhl/sigma.hpp"

namespace bhl {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string failure;  // first counterexample
};

struct VerifyOptions {
  unsigned jobs = 1;
  std::size_t sample = 2000;
  std::uint64_t seed = 1;
  /// Triple-indexed checks are exhaustive up to this group order, sampled above it.
  std::size_t exhaustive_order = 24;
};

/// main-theorem, vanishing, theta, mixed-meet, demazure, poles, kl-conjecture, gk-base.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws std::invalid_argument for unknown names.
std::vector<CheckResult> run_suite(std::string_view suite, const SigmaEngine& engine, const VerifyOptions& options = {});

}  // namespace bhl
