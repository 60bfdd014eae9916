#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "mdsforge/field.hpp"
#include "mdsforge/linalg.hpp"

namespace mdsforge {

inline constexpr std::uint64_t kDefaultSubsetCap = 10'000'000;

/// A k-dimensional subspace of F_q^n given by a full-rank k x n generator.
/// k = 0 is allowed so that duals of full spaces are representable.
class LinearCode {
 public:
  LinearCode(Field field, Matrix generator);
  /// Zero-dimensional code of length n.
  static LinearCode zero_code(Field field, Index length);

  const Field& field() const { return field_; }
  const Matrix& generator() const { return g_; }
  Index dimension() const { return g_.rows(); }
  Index length() const { return length_; }

  friend bool operator==(const LinearCode& a, const LinearCode& b);

 private:
  LinearCode(Field field, Matrix generator, Index length);
  Field field_;
  Matrix g_;
  Index length_;
};

struct MdsResult {
  bool mds = false;
  std::optional<std::vector<Index>> witness;  // first singular k-subset, lexicographic
  std::uint64_t subsets_checked = 0;
};

/// All k-column minors nonzero.  Throws ResourceLimit above `cap` subsets.
MdsResult is_mds(const LinearCode& c, std::uint64_t cap = kDefaultSubsetCap);

LinearCode dual(const LinearCode& c);

Vector schur_product(const Vector& x, const Vector& y);
LinearCode schur_square(const LinearCode& c);

enum class GrsVerdict { GRS, NonGRS, Inconclusive, NotMDS };
enum class GrsBranch { Direct, ViaDual, SmallK, None };

std::string_view to_string(GrsVerdict v);
std::string_view to_string(GrsBranch b);

struct GrsTestResult {
  GrsVerdict verdict = GrsVerdict::Inconclusive;
  GrsBranch branch = GrsBranch::None;
  std::optional<Index> square_dim;       // dim C^2 when computed
  std::optional<Index> dual_square_dim;  // dim (C^perp)^2 on the dual branch
  MdsResult mds;
};

/// Schur-square GRS decision for MDS codes; small k and the dual branch as
/// fallbacks, Inconclusive when neither applies.
GrsTestResult grs_test(const LinearCode& c, std::uint64_t cap = kDefaultSubsetCap);

}  // namespace mdsforge
