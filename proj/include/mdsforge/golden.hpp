#pragma once

// Reference cases with hand-entered expected matrices and verdicts.  Each
// case rebuilds its objects through the library and compares entry by entry.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mdsforge/code.hpp"

namespace mdsforge {

struct GoldenCheck {
  std::string what;
  bool pass = false;
  std::string detail;
};

struct GoldenOutcome {
  std::string name;
  std::string summary;
  std::vector<GoldenCheck> checks;
  std::vector<std::pair<std::string, std::string>> shown;  // label, rendered value
  bool pass() const;
};

struct GoldenOptions {
  std::uint64_t cap = kDefaultSubsetCap;
  /// Corrupts one computed entry of the named case before comparison.
  std::optional<std::string> tamper;
};

std::vector<std::string> golden_case_names();

/// Runs the cases named in `only` (all when empty).  Unknown names throw
/// SpecInvalid.
std::vector<GoldenOutcome> run_golden(const std::vector<std::string>& only, const GoldenOptions& options = {});

}  // namespace mdsforge
