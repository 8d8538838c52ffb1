#pragma once

// Self-check suites run by `z2ring verify`.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace z2ring {

struct VerifyItem {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyItem> items;
  bool all_passed() const;
  std::size_t failures() const;
};

struct VerifyOptions {
  std::uint64_t seed = 20240611;
  /// Random instances per randomized lemma check.
  std::size_t samples = 2000;
  /// Largest r for the classification table.
  std::size_t max_r = 6;
};

/// Known suites: lemmas, weyl, classification, all.
const std::vector<std::string>& suite_names();

/// Throws InvalidArgument for an unknown suite.
VerifyReport run_suite(const std::string& suite, const VerifyOptions& options = {});

nlohmann::json report_to_json(const VerifyReport& report);
std::string report_to_text(const VerifyReport& report);

}  // namespace z2ring
