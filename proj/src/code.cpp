#include "mdsforge/code.hpp"

#include <string>

namespace mdsforge {

LinearCode::LinearCode(Field field, Matrix generator, Index length)
    : field_(std::move(field)), g_(std::move(generator)), length_(length) {}

LinearCode::LinearCode(Field field, Matrix generator)
    : field_(std::move(field)), length_(generator.cols()) {
  if (generator.rows() > generator.cols()) {
    raise(ErrorKind::NotFullRank, "generator has more rows than columns");
  }
  g_ = lift(field_, generator);
  if (rank(g_) != g_.rows()) raise(ErrorKind::NotFullRank, "generator not full rank");
}

LinearCode LinearCode::zero_code(Field field, Index length) {
  return LinearCode(std::move(field), Matrix(0, length), length);
}

bool operator==(const LinearCode& a, const LinearCode& b) {
  if (a.field_ != b.field_ || a.length_ != b.length_ || a.dimension() != b.dimension()) return false;
  return a.dimension() == 0 || same_row_space(a.g_, b.g_);
}

MdsResult is_mds(const LinearCode& c, std::uint64_t cap) {
  MdsResult out;
  const Index k = c.dimension();
  const Index n = c.length();
  const std::uint64_t total = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
  if (total > cap) {
    raise(ErrorKind::ResourceLimit, "C(" + std::to_string(n) + "," + std::to_string(k) + ") = " +
                                        std::to_string(total) + " minors exceeds cap " +
                                        std::to_string(cap));
  }
  if (k == 0) {
    out.mds = true;
    return out;
  }
  for (SubsetWalker w(n, k); !w.done(); w.next()) {
    ++out.subsets_checked;
    const auto& cols = w.current();
    if (det(columns_submatrix<Element>(c.generator(), cols)).is_zero()) {
      out.witness = cols;
      return out;
    }
  }
  out.mds = true;
  return out;
}

LinearCode dual(const LinearCode& c) {
  if (c.dimension() == 0) return LinearCode(c.field(), identity(c.field(), c.length()));
  Matrix h = right_kernel(c.generator());
  if (h.rows() == 0) return LinearCode::zero_code(c.field(), c.length());
  return LinearCode(c.field(), h);
}

Vector schur_product(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) {
    raise(ErrorKind::LengthMismatch, "Schur product of vectors of length " +
                                         std::to_string(x.size()) + " and " + std::to_string(y.size()));
  }
  Vector out(x.size());
  for (Index i = 0; i < x.size(); ++i) out(i) = x(i) * y(i);
  return out;
}

LinearCode schur_square(const LinearCode& c) {
  const Index k = c.dimension();
  if (k == 0) return c;
  const Matrix& g = c.generator();
  Matrix products(k * (k + 1) / 2, c.length());
  Index r = 0;
  for (Index i = 0; i < k; ++i) {
    for (Index j = i; j < k; ++j) products.row(r++) = schur_product(g.row(i), g.row(j));
  }
  return LinearCode(c.field(), rref(products));
}

std::string_view to_string(GrsVerdict v) {
  switch (v) {
    case GrsVerdict::GRS: return "GRS";
    case GrsVerdict::NonGRS: return "NonGRS";
    case GrsVerdict::Inconclusive: return "Inconclusive";
    case GrsVerdict::NotMDS: return "NotMDS";
  }
  return "?";
}

std::string_view to_string(GrsBranch b) {
  switch (b) {
    case GrsBranch::Direct: return "direct";
    case GrsBranch::ViaDual: return "via-dual";
    case GrsBranch::SmallK: return "small-k";
    case GrsBranch::None: return "none";
  }
  return "?";
}

GrsTestResult grs_test(const LinearCode& c, std::uint64_t cap) {
  GrsTestResult out;
  out.mds = is_mds(c, cap);
  if (!out.mds.mds) {
    out.verdict = GrsVerdict::NotMDS;
    return out;
  }
  const Index n = c.length();
  const Index k = c.dimension();
  // 2k <= n - 1 is k <= (n-1)/2 without rounding trouble.
  if (k >= 1 && 2 * k <= n - 1) {
    out.square_dim = schur_square(c).dimension();
    if (k <= 2) {
      out.branch = GrsBranch::SmallK;
      out.verdict = GrsVerdict::GRS;
      return out;
    }
    out.branch = GrsBranch::Direct;
    out.verdict = *out.square_dim == 2 * k - 1 ? GrsVerdict::GRS : GrsVerdict::NonGRS;
    return out;
  }
  if (k >= 1 && k <= n && (k <= 2 || k >= n - 2)) {
    out.branch = GrsBranch::SmallK;
    out.verdict = GrsVerdict::GRS;
    return out;
  }
  const Index kd = n - k;
  if (kd >= 1 && 2 * kd <= n - 1) {
    const LinearCode d = dual(c);
    out.dual_square_dim = schur_square(d).dimension();
    out.branch = GrsBranch::ViaDual;
    out.verdict = *out.dual_square_dim == 2 * kd - 1 ? GrsVerdict::GRS : GrsVerdict::NonGRS;
    return out;
  }
  return out;
}

}  // namespace mdsforge
