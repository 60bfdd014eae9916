#pragma once

// Dense exact linear algebra on Eigen matrices of field elements and of
// polynomials.  Elimination routines are templated on the scalar so the same
// code serves F_q and F_q[x]; they only need +, -, *, exact division and
// is_zero().

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "mdsforge/error.hpp"
#include "mdsforge/field.hpp"
#include "mdsforge/polynomial.hpp"

namespace mdsforge {

using Index = Eigen::Index;

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using DenseRow = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

using Matrix = DenseMatrix<Element>;
using Vector = DenseRow<Element>;
using PolyMatrix = DenseMatrix<Poly>;

/// A point of the projective line over F_q: a field element or infinity.
class EvalPoint {
 public:
  EvalPoint(Element value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  static EvalPoint infinity() { return EvalPoint(); }

  bool is_infinity() const noexcept { return !value_.has_value(); }
  const Element& value() const {
    if (!value_) raise(ErrorKind::SpecInvalid, "the point at infinity has no value");
    return *value_;
  }
  std::string to_string() const { return value_ ? value_->to_string() : "inf"; }

  friend bool operator==(const EvalPoint& a, const EvalPoint& b) {
    if (a.is_infinity() || b.is_infinity()) return a.is_infinity() == b.is_infinity();
    return *a.value_ == *b.value_;
  }

 private:
  EvalPoint() = default;
  std::optional<Element> value_;
};

std::vector<EvalPoint> to_points(std::span<const Element> values);
/// Throws DuplicatePoints when two points coincide.
void require_distinct(std::span<const EvalPoint> alpha);
void require_distinct(std::span<const Element> alpha);

// ---------------------------------------------------------------------------
// constructors

Matrix zeros(const Field& f, Index rows, Index cols);
Matrix identity(const Field& f, Index n);
Matrix diagonal(const Field& f, std::span<const Element> d);
/// Replaces context-free integers by elements of `f`; embeds prime-field entries.
Matrix lift(const Field& f, const Matrix& m);
/// First entry that knows its field, if any.
std::optional<Field> field_of(const Matrix& m);

/// rows x n matrix whose column j is (1, a, ..., a^{rows-1})^T for a finite
/// point and the last unit vector for infinity.  Entries are embedded in `f`.
Matrix vandermonde(const Field& f, std::span<const EvalPoint> alpha, Index rows);
Matrix vandermonde(const Field& f, std::span<const Element> alpha, Index rows);

// ---------------------------------------------------------------------------
// elimination, generic over the scalar

inline Element exact_div(const Element& a, const Element& b) { return a / b; }
template <class Ring>
Polynomial<Ring> exact_div(const Polynomial<Ring>& a, const Polynomial<Ring>& b) {
  return exact_quotient(a, b);
}

template <class Scalar>
struct Echelon {
  DenseMatrix<Scalar> matrix;
  std::vector<Index> pivots;  // pivot column of each nonzero row
  Scalar det;                 // determinant when the input was square
};

/// Gauss(-Jordan) elimination over a field.  With `reduced`, pivots are 1 and
/// cleared above and below.
template <class Scalar>
Echelon<Scalar> echelon(DenseMatrix<Scalar> m, bool reduced) {
  Echelon<Scalar> out;
  Scalar det(1);
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index pivot = -1;
    for (Index r = row; r < m.rows(); ++r) {
      if (!is_zero(m(r, col))) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) {
      m.row(pivot).swap(m.row(row));
      det = -det;
    }
    const Scalar lead = m(row, col);
    det *= lead;
    const Scalar inv = Scalar(1) / lead;
    for (Index c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (Index r = reduced ? 0 : row + 1; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      const Scalar factor = m(r, col);
      for (Index c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  if (m.rows() == m.cols() && row < m.rows()) det = Scalar(0);
  out.matrix = std::move(m);
  out.det = det;
  return out;
}

/// Fraction-free determinant; valid over any integral domain with exact division.
template <class Scalar>
Scalar bareiss_det(DenseMatrix<Scalar> m) {
  if (m.rows() != m.cols()) raise(ErrorKind::NotSquare, "determinant of a non-square matrix");
  const Index n = m.rows();
  if (n == 0) return Scalar(1);
  bool negate = false;
  Scalar prev(1);
  for (Index k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      Index swap = -1;
      for (Index r = k + 1; r < n; ++r) {
        if (!is_zero(m(r, k))) {
          swap = r;
          break;
        }
      }
      if (swap < 0) return Scalar(0);
      m.row(k).swap(m.row(swap));
      negate = !negate;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
      }
      m(i, k) = Scalar(0);
    }
    prev = m(k, k);
  }
  Scalar d = m(n - 1, n - 1);
  return negate ? -d : d;
}

/// Cofactor expansion along the first row; exponential, for oracles only.
template <class Scalar>
Scalar laplace_det(const DenseMatrix<Scalar>& m) {
  if (m.rows() != m.cols()) raise(ErrorKind::NotSquare, "determinant of a non-square matrix");
  const Index n = m.rows();
  if (n == 0) return Scalar(1);
  if (n == 1) return m(0, 0);
  Scalar total(0);
  for (Index j = 0; j < n; ++j) {
    if (is_zero(m(0, j))) continue;
    DenseMatrix<Scalar> minor(n - 1, n - 1);
    for (Index r = 1; r < n; ++r) {
      for (Index c = 0, cc = 0; c < n; ++c) {
        if (c != j) minor(r - 1, cc++) = m(r, c);
      }
    }
    Scalar term = m(0, j) * laplace_det(minor);
    if (j % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

/// Selected columns, in order.  Indices must be strictly increasing.
template <class Scalar>
DenseMatrix<Scalar> columns_submatrix(const DenseMatrix<Scalar>& m, std::span<const Index> cols) {
  DenseMatrix<Scalar> out(m.rows(), static_cast<Index>(cols.size()));
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (cols[i] < 0 || cols[i] >= m.cols()) {
      raise(ErrorKind::IndexOutOfRange, "column " + std::to_string(cols[i]) + " out of range");
    }
    if (i > 0 && cols[i] <= cols[i - 1]) {
      raise(ErrorKind::IndexOutOfRange, "column indices must be strictly increasing");
    }
    out.col(static_cast<Index>(i)) = m.col(cols[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// F_q matrices

Element det(const Matrix& m);
Index rank(const Matrix& m);
Matrix inverse(const Matrix& m);
/// Reduced row echelon form with zero rows dropped.
Matrix rref(const Matrix& m);
/// Basis (as rows) of {x : m x^T = 0}.
Matrix right_kernel(const Matrix& m);
bool same_row_space(const Matrix& a, const Matrix& b);
bool equal(const Matrix& a, const Matrix& b);
bool equal(const PolyMatrix& a, const PolyMatrix& b);

/// Helper for printing matrices in diagnostics and golden output.
std::string to_string(const Matrix& m);

// ---------------------------------------------------------------------------
// F_q[x] matrices

/// Exact determinant by Bareiss elimination.  Debug builds re-check
/// dimensions up to 4 against cofactor expansion.
Poly poly_det(const PolyMatrix& m);
/// Entry-wise evaluation at `beta`, embedding coefficients into beta's field.
Matrix poly_eval_matrix(const PolyMatrix& m, const Element& beta);
/// Constant matrix viewed as polynomials.
PolyMatrix to_poly_matrix(const Matrix& m);

// ---------------------------------------------------------------------------
// column subsets

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Walks the k-subsets of {0, ..., n-1} in lexicographic order.
class SubsetWalker {
 public:
  SubsetWalker(Index n, Index k);
  const std::vector<Index>& current() const { return idx_; }
  bool done() const { return done_; }
  void next();

 private:
  Index n_;
  std::vector<Index> idx_;
  bool done_ = false;
};

}  // namespace mdsforge
