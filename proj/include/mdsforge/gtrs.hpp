#pragma once

// Generalized twisted Reed-Solomon codes: generators in (I_k | M) V_alpha D_v
// form, recognition through G (V_alpha D_v)^{-1}, and the parity-check
// characterizations for a fixed (alpha, v).

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mdsforge/field.hpp"
#include "mdsforge/linalg.hpp"

namespace mdsforge {

/// One twist: coefficient eta of f_h x^{k-1+t}.  h in [0, k-1], t in [1, n-k].
struct Hook {
  Index h = 0;
  Index t = 1;
  Element eta;
  friend bool operator==(const Hook& a, const Hook& b) {
    return a.h == b.h && a.t == b.t && a.eta == b.eta;
  }
};

struct GtrsSpec {
  Field field;
  std::vector<Element> alpha;  // distinct, finite
  std::vector<Element> v;      // nonzero
  Index k = 0;
  std::vector<Hook> hooks;

  Index length() const { return static_cast<Index>(alpha.size()); }
};

/// Throws SpecInvalid (or DuplicatePoints) on a malformed spec.
void validate(const GtrsSpec& spec);

/// k x (n-k) matrix with eta_j at (h_j, t_j - 1).
Matrix twist_matrix(const GtrsSpec& spec);
/// Hooks read off the nonzero entries of M in row-major order.
GtrsSpec spec_from_twist(const Matrix& m, const Field& field, std::span<const Element> alpha,
                         std::span<const Element> v);

/// (I_k | M) V_alpha D_v with V_alpha the full n x n Vandermonde matrix.
Matrix build_gtrs_generator(const GtrsSpec& spec);

struct RecognitionAttempt {
  Matrix ab;  // G (V_alpha D_v)^{-1}
  Matrix a;   // first k columns
  Matrix b;   // remaining n-k columns
  bool a_invertible = false;
};

struct Recognition {
  Matrix ab;
  Matrix a;
  Matrix a_inv;  // the transform T
  Matrix twist;  // M = A^{-1} B
  GtrsSpec spec;
  Matrix transformed;  // T G, equal to build_gtrs_generator(spec)
};

RecognitionAttempt gtrs_factor(const Matrix& g, std::span<const Element> alpha, std::span<const Element> v);

/// Sufficient test only: absence means "not recognized for this (alpha, v)".
std::optional<Recognition> gtrs_recognize(const Matrix& g, std::span<const Element> alpha,
                                          std::span<const Element> v);

struct SearchOptions {
  std::uint64_t seed = 0;
  std::uint64_t tries = 1000;
  bool exhaustive = false;  // every ordering of alpha; only for n <= 8
};

struct SearchHit {
  std::vector<Element> alpha;
  Recognition recognition;
  std::uint64_t attempts = 0;
};

/// Retries recognition over orderings of the given evaluation points with v
/// permuted alongside.  Beyond the single-ordering test above.
std::optional<SearchHit> gtrs_search(const Matrix& g, std::span<const Element> alpha,
                                     std::span<const Element> v, const SearchOptions& options);

struct E11Recognition {
  GtrsSpec spec;
  Recognition recognition;
  bool m0_zero = false;  // some alpha_i = 0 with i >= 2
};

/// Recognition of G_{alpha,v} + beta E_11 with the same (alpha, v).
E11Recognition recognize_e11_family(const Matrix& g, std::span<const Element> alpha,
                                    std::span<const Element> v);

/// w_l = (u_l prod_{m != l} (alpha_l - alpha_m))^{-1}, spanning the dual of
/// GRS_{n,n-1}(alpha, u).
std::vector<Element> dual_grs_weight(std::span<const Element> alpha, std::span<const Element> u);

struct AntidiagReport {
  Matrix weights;  // w as a 1 x n row
  Matrix product;  // (1; alpha; ...; alpha^{k-1}) D_w G^T, k x k
  bool zero_below = false;      // entries with i + j >= k vanish
  bool antidiag_nonzero = false;
  bool zero_above = false;      // entries with i + j < k - 1 vanish
  bool strict() const { return zero_below && antidiag_nonzero && zero_above; }
};

AntidiagReport antidiag_product(const Matrix& g, std::span<const Element> alpha, std::span<const Element> v);

/// True iff the product above is anti-diagonal with nonzero anti-diagonal.
bool gtrs_antidiag_check(const Matrix& g, std::span<const Element> alpha, std::span<const Element> v);

/// Rows of G - (1; ...; alpha^{k-1}) D_v lie in the span of
/// (alpha^k; ...; alpha^{n-1}) D_v.  Holds exactly for the (I_k | M) form.
bool gtrs_lemma_check(const Matrix& g, std::span<const Element> alpha, std::span<const Element> v);

}  // namespace mdsforge
