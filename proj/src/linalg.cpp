#include "mdsforge/linalg.hpp"

#include <limits>
#include <sstream>

namespace mdsforge {

std::vector<EvalPoint> to_points(std::span<const Element> values) {
  return {values.begin(), values.end()};
}

void require_distinct(std::span<const EvalPoint> alpha) {
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    for (std::size_t j = i + 1; j < alpha.size(); ++j) {
      if (alpha[i] == alpha[j]) {
        raise(ErrorKind::DuplicatePoints, "points " + std::to_string(i) + " and " +
                                              std::to_string(j) + " coincide (" +
                                              alpha[i].to_string() + ")");
      }
    }
  }
}

void require_distinct(std::span<const Element> alpha) {
  const auto pts = to_points(alpha);
  require_distinct(std::span<const EvalPoint>(pts));
}

Matrix zeros(const Field& f, Index rows, Index cols) {
  return Matrix::Constant(rows, cols, f.zero());
}

Matrix identity(const Field& f, Index n) {
  Matrix m = zeros(f, n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

Matrix diagonal(const Field& f, std::span<const Element> d) {
  const auto n = static_cast<Index>(d.size());
  Matrix m = zeros(f, n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = embed(d[static_cast<std::size_t>(i)], f);
  return m;
}

Matrix lift(const Field& f, const Matrix& m) {
  Matrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = embed(m(i, j), f);
  }
  return out;
}

std::optional<Field> field_of(const Matrix& m) {
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (m(i, j).has_field()) return m(i, j).field();
    }
  }
  return std::nullopt;
}

Matrix vandermonde(const Field& f, std::span<const EvalPoint> alpha, Index rows) {
  if (rows < 1) raise(ErrorKind::SpecInvalid, "a Vandermonde matrix needs at least one row");
  require_distinct(alpha);
  const auto n = static_cast<Index>(alpha.size());
  Matrix m = zeros(f, rows, n);
  for (Index j = 0; j < n; ++j) {
    const EvalPoint& pt = alpha[static_cast<std::size_t>(j)];
    if (pt.is_infinity()) {
      m(rows - 1, j) = f.one();
      continue;
    }
    const Element a = embed(pt.value(), f);
    Element power = f.one();
    for (Index i = 0; i < rows; ++i) {
      m(i, j) = power;
      power *= a;
    }
  }
  return m;
}

Matrix vandermonde(const Field& f, std::span<const Element> alpha, Index rows) {
  const auto pts = to_points(alpha);
  return vandermonde(f, std::span<const EvalPoint>(pts), rows);
}

namespace {

Element in_field_of(const Matrix& m, Element e) {
  if (e.has_field()) return e;
  if (auto f = field_of(m)) return e.in(*f);
  return e;
}

}  // namespace

Element det(const Matrix& m) {
  if (m.rows() != m.cols()) raise(ErrorKind::NotSquare, "determinant of a non-square matrix");
  return in_field_of(m, echelon<Element>(m, false).det);
}

Index rank(const Matrix& m) {
  return static_cast<Index>(echelon<Element>(m, false).pivots.size());
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) raise(ErrorKind::NotSquare, "inverse of a non-square matrix");
  const Index n = m.rows();
  const auto f = field_of(m);
  Matrix aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = f ? identity(*f, n) : Matrix::Identity(n, n);
  auto e = echelon<Element>(aug, true);
  if (static_cast<Index>(e.pivots.size()) < n || e.pivots[static_cast<std::size_t>(n - 1)] != n - 1) {
    raise(ErrorKind::Singular, "matrix is singular");
  }
  return e.matrix.rightCols(n);
}

Matrix rref(const Matrix& m) {
  auto e = echelon<Element>(m, true);
  return e.matrix.topRows(static_cast<Index>(e.pivots.size()));
}

Matrix right_kernel(const Matrix& m) {
  const auto e = echelon<Element>(m, true);
  const Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index c : e.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  const auto f = field_of(m);
  const Index dim = n - static_cast<Index>(e.pivots.size());
  Matrix basis(dim, n);
  basis.setConstant(f ? f->zero() : Element(0));
  Index row = 0;
  for (Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis(row, free) = f ? f->one() : Element(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      basis(row, e.pivots[r]) = -e.matrix(static_cast<Index>(r), free);
    }
    ++row;
  }
  return rref(basis);
}

bool equal(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      if (a(i, j) != b(i, j)) return false;
    }
  }
  return true;
}

bool equal(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      if (a(i, j) != b(i, j)) return false;
    }
  }
  return true;
}

bool same_row_space(const Matrix& a, const Matrix& b) {
  return a.cols() == b.cols() && equal(rref(a), rref(b));
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  os << '[';
  for (Index i = 0; i < m.rows(); ++i) {
    if (i) os << ", ";
    os << '[';
    for (Index j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << m(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

Poly poly_det(const PolyMatrix& m) {
  Poly d = bareiss_det<Poly>(m);
#ifndef NDEBUG
  if (m.rows() <= 4 && d != laplace_det<Poly>(m)) {
    raise(ErrorKind::VerificationFailed, "Bareiss and cofactor determinants disagree");
  }
#endif
  return d;
}

Matrix poly_eval_matrix(const PolyMatrix& m, const Element& beta) {
  if (!beta.has_field()) raise(ErrorKind::ContextMismatch, "evaluation point needs a field");
  const Field& f = beta.field();
  Matrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      Element v = m(i, j).evaluate(beta, [&](const Element& c) {
        try {
          return embed(c, f);
        } catch (const Error& err) {
          if (err.kind() == ErrorKind::NoEmbedding) raise(ErrorKind::ContextMismatch, err.what());
          throw;
        }
      });
      out(i, j) = v.in(f);
    }
  }
  return out;
}

PolyMatrix to_poly_matrix(const Matrix& m) {
  PolyMatrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = Poly(m(i, j));
  }
  return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(r);
}

SubsetWalker::SubsetWalker(Index n, Index k) : n_(n) {
  if (k < 0 || k > n) {
    done_ = true;
    return;
  }
  idx_.resize(static_cast<std::size_t>(k));
  for (Index i = 0; i < k; ++i) idx_[static_cast<std::size_t>(i)] = i;
}

void SubsetWalker::next() {
  if (done_) return;
  const auto k = static_cast<Index>(idx_.size());
  Index i = k - 1;
  while (i >= 0 && idx_[static_cast<std::size_t>(i)] == n_ - k + i) --i;
  if (i < 0) {
    done_ = true;
    return;
  }
  ++idx_[static_cast<std::size_t>(i)];
  for (Index j = i + 1; j < k; ++j) {
    idx_[static_cast<std::size_t>(j)] = idx_[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace mdsforge
