#pragma once

// GRS generators over F_q, their perturbations by powers of beta in F_{q^b},
// the degree-bound MDS certificate, and the three non-GRS families.
//
// Row and column indices are 0-based here; the CLI and JSON layer use 1-based
// positions to match the usual matrix notation.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mdsforge/code.hpp"
#include "mdsforge/field.hpp"
#include "mdsforge/linalg.hpp"

namespace mdsforge {

struct GrsSpec {
  Field field;  // F_q
  std::vector<EvalPoint> alpha;
  std::vector<Element> v;
  Index k = 0;

  Index length() const { return static_cast<Index>(alpha.size()); }
};

/// Throws SpecInvalid / DuplicatePoints on a malformed spec.
void validate(const GrsSpec& spec);

/// vandermonde(alpha, k) * D_v over spec.field.
Matrix build_grs_generator(const GrsSpec& spec);

struct Position {
  Index row = 0;
  Index col = 0;
  unsigned exponent = 1;
  friend bool operator==(const Position&, const Position&) = default;
};

struct PerturbationSpec {
  std::vector<Position> positions;
  Element beta;
};

/// G_{alpha,v} + sum x^{s} E_{row,col} as a matrix over F_q[x].
PolyMatrix symbolic_perturbation(const GrsSpec& spec, std::span<const Position> positions);

struct MdsCertificate {
  int max_degree = kZeroPolynomialDegree;
  bool all_nonzero = true;
  std::uint64_t subsets = 0;
};

/// Degrees of all k-column determinants of `pm`.
MdsCertificate mds_certificate(const PolyMatrix& pm, Index k, std::uint64_t cap = kDefaultSubsetCap);

struct PerturbedCode {
  LinearCode code;
  bool certified_mds = false;
  MdsCertificate certificate;
  unsigned beta_degree = 0;  // degree of beta's minimal polynomial over F_q
};

/// Embeds G_{alpha,v} into beta's field and adds beta^{s} at each position.
PerturbedCode build_perturbed_code(const GrsSpec& spec, const PerturbationSpec& pert,
                                   std::uint64_t cap = kDefaultSubsetCap);

/// Columns l where e = g_j * g_{j+2} - g_{j+1} * g_{j+1}, with beta kept as an
/// indeterminate, has a nonzero coefficient of beta.  All exponents must be 1.
std::vector<Index> prop1_linear_columns(const GrsSpec& spec, std::span<const Position> positions, Index j);
bool check_prop1_condition(const GrsSpec& spec, std::span<const Position> positions, Index j);

enum class FamilyKind { Prop1, FirstColumn, SingleE11 };

std::string_view to_string(FamilyKind kind);

struct FamilyOptions {
  /// Skip the sufficient-only clauses (Prop1 degree bound, SingleE11 outside
  /// column 1).  Results are then verified but not backed by the theory.
  bool allow_unverified = false;
  std::optional<Index> row_j;  // Prop1: rows j, j+1, j+2; first valid j if absent
  std::uint64_t cap = kDefaultSubsetCap;
};

struct FamilyResult {
  LinearCode code;
  GrsSpec spec;  // v as finally used (Prop1 may replace one entry)
  PerturbationSpec perturbation;
  MdsCertificate certificate;
  bool certified_mds = false;
  GrsTestResult grs;
  std::optional<Index> row_j;
  unsigned v_retries = 0;
  bool unverified_by_theory = false;
};

/// Builds one of the non-GRS families after checking its preconditions, then
/// re-verifies MDS and NonGRS directly.  Throws PreconditionViolated naming
/// the failed clause, VerificationFailed if the checks disagree.
FamilyResult construct_family(FamilyKind kind, const GrsSpec& spec, const PerturbationSpec& pert,
                              const FamilyOptions& options = {});

}  // namespace mdsforge
