#pragma once

#include <optional>
#include <vector>

#include "mdsforge/code.hpp"
#include "mdsforge/gtrs.hpp"

namespace mdsforge {

struct ClassificationReport {
  GrsTestResult grs;
  /// Filled when (alpha, v) were supplied and recognition was attempted.
  bool gtrs_attempted = false;
  std::optional<Recognition> gtrs;
};

struct GtrsCandidate {
  std::vector<Element> alpha;
  std::vector<Element> v;
};

/// is_mds, then grs_test, then gtrs_recognize when a candidate is given and
/// its shape fits the code.
ClassificationReport classify(const LinearCode& code, const std::optional<GtrsCandidate>& candidate = {},
                              std::uint64_t cap = kDefaultSubsetCap);

}  // namespace mdsforge
