#include "mdsforge/gtrs.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

namespace mdsforge {

namespace {

Field field_of_generator(const Matrix& g) {
  const auto f = field_of(g);
  if (!f) raise(ErrorKind::ContextMismatch, "generator entries carry no field");
  return *f;
}

std::vector<Element> embed_all(std::span<const Element> xs, const Field& f) {
  std::vector<Element> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(embed(x, f));
  return out;
}

void check_shape(const Matrix& g, std::span<const Element> alpha, std::span<const Element> v) {
  const auto n = static_cast<Index>(alpha.size());
  if (g.cols() != n || static_cast<Index>(v.size()) != n) {
    raise(ErrorKind::DimensionMismatch, "generator has " + std::to_string(g.cols()) + " columns, alpha " +
                                            std::to_string(alpha.size()) + ", v " + std::to_string(v.size()));
  }
  if (g.rows() < 1 || g.rows() > n) {
    raise(ErrorKind::DimensionMismatch, "generator must have between 1 and n rows");
  }
  require_distinct(alpha);
  for (const auto& x : v) {
    if (x.is_zero()) raise(ErrorKind::SpecInvalid, "v has a zero entry");
  }
}

Matrix scaled_vandermonde(const Field& f, std::span<const Element> alpha, std::span<const Element> v,
                          Index rows) {
  Matrix m = vandermonde(f, alpha, rows);
  for (Index j = 0; j < m.cols(); ++j) {
    const Element vj = embed(v[static_cast<std::size_t>(j)], f);
    for (Index i = 0; i < rows; ++i) m(i, j) *= vj;
  }
  return m;
}

}  // namespace

void validate(const GtrsSpec& spec) {
  if (!spec.field.valid()) raise(ErrorKind::SpecInvalid, "GTRS spec has no field");
  const Index n = spec.length();
  const Index k = spec.k;
  if (static_cast<Index>(spec.v.size()) != n) raise(ErrorKind::SpecInvalid, "alpha and v differ in length");
  if (k < 1 || k > n) raise(ErrorKind::SpecInvalid, "need 1 <= k <= n");
  require_distinct(std::span<const Element>(spec.alpha));
  for (const auto& x : spec.v) {
    if (x.is_zero()) raise(ErrorKind::SpecInvalid, "v has a zero entry");
  }
  for (std::size_t i = 0; i < spec.hooks.size(); ++i) {
    const Hook& hk = spec.hooks[i];
    if (hk.h < 0 || hk.h >= k) raise(ErrorKind::SpecInvalid, "hook h must lie in [0, k-1]");
    if (hk.t < 1 || hk.t > n - k) raise(ErrorKind::SpecInvalid, "hook t must lie in [1, n-k]");
    if (hk.eta.is_zero()) raise(ErrorKind::SpecInvalid, "hook eta must be nonzero");
    for (std::size_t j = 0; j < i; ++j) {
      if (spec.hooks[j].h == hk.h && spec.hooks[j].t == hk.t) {
        raise(ErrorKind::SpecInvalid, "hooks (h, t) must be distinct");
      }
    }
  }
}

Matrix twist_matrix(const GtrsSpec& spec) {
  validate(spec);
  Matrix m = zeros(spec.field, spec.k, spec.length() - spec.k);
  for (const Hook& hk : spec.hooks) m(hk.h, hk.t - 1) = embed(hk.eta, spec.field);
  return m;
}

GtrsSpec spec_from_twist(const Matrix& m, const Field& field, std::span<const Element> alpha,
                         std::span<const Element> v) {
  GtrsSpec spec{field, embed_all(alpha, field), embed_all(v, field), m.rows(), {}};
  if (m.rows() + m.cols() != spec.length()) {
    raise(ErrorKind::SpecInvalid, "twist matrix shape does not match n");
  }
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero()) spec.hooks.push_back(Hook{i, j + 1, embed(m(i, j), field)});
    }
  }
  validate(spec);
  return spec;
}

Matrix build_gtrs_generator(const GtrsSpec& spec) {
  const Matrix m = twist_matrix(spec);
  const Index k = spec.k;
  const Index n = spec.length();
  Matrix im(k, n);
  im.leftCols(k) = identity(spec.field, k);
  im.rightCols(n - k) = m;
  return im * scaled_vandermonde(spec.field, spec.alpha, spec.v, n);
}

RecognitionAttempt gtrs_factor(const Matrix& g, std::span<const Element> alpha, std::span<const Element> v) {
  check_shape(g, alpha, v);
  const Field f = field_of_generator(g);
  const Index n = g.cols();
  const Index k = g.rows();
  RecognitionAttempt out;
  out.ab = g * inverse(scaled_vandermonde(f, alpha, v, n));
  out.a = out.ab.leftCols(k);
  out.b = out.ab.rightCols(n - k);
  out.a_invertible = rank(out.a) == k;
  return out;
}

std::optional<Recognition> gtrs_recognize(const Matrix& g, std::span<const Element> alpha,
                                          std::span<const Element> v) {
  RecognitionAttempt at = gtrs_factor(g, alpha, v);
  if (!at.a_invertible) return std::nullopt;
  const Field f = field_of_generator(g);
  Recognition r;
  r.a_inv = inverse(at.a);
  r.twist = r.a_inv * at.b;
  r.spec = spec_from_twist(r.twist, f, alpha, v);
  r.transformed = r.a_inv * g;
  r.ab = std::move(at.ab);
  r.a = std::move(at.a);
  if (!equal(r.transformed, build_gtrs_generator(r.spec))) {
    raise(ErrorKind::VerificationFailed, "T G differs from the rebuilt GTRS generator");
  }
  return r;
}

std::optional<SearchHit> gtrs_search(const Matrix& g, std::span<const Element> alpha,
                                     std::span<const Element> v, const SearchOptions& options) {
  check_shape(g, alpha, v);
  const std::size_t n = alpha.size();
  if (options.exhaustive && n > 8) {
    raise(ErrorKind::ResourceLimit, "exhaustive ordering search is limited to n <= 8");
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(options.seed);
  std::uint64_t attempts = 0;
  std::vector<Element> a(n), w(n);
  auto attempt = [&]() -> std::optional<SearchHit> {
    ++attempts;
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = alpha[order[i]];
      w[i] = v[order[i]];
    }
    if (auto r = gtrs_recognize(g, a, w)) return SearchHit{a, std::move(*r), attempts};
    return std::nullopt;
  };
  if (options.exhaustive) {
    do {
      if (auto hit = attempt()) return hit;
    } while (std::next_permutation(order.begin(), order.end()));
    return std::nullopt;
  }
  for (std::uint64_t i = 0; i < options.tries; ++i) {
    if (i > 0) std::shuffle(order.begin(), order.end(), rng);
    if (auto hit = attempt()) return hit;
  }
  return std::nullopt;
}

E11Recognition recognize_e11_family(const Matrix& g, std::span<const Element> alpha,
                                    std::span<const Element> v) {
  check_shape(g, alpha, v);
  const Field f = field_of_generator(g);
  const Index k = g.rows();
  const Matrix base = scaled_vandermonde(f, alpha, v, k);
  const Matrix diff = g - base;
  for (Index i = 0; i < k; ++i) {
    for (Index j = 0; j < g.cols(); ++j) {
      if ((i != 0 || j != 0) && !diff(i, j).is_zero()) {
        raise(ErrorKind::PreconditionViolated, "generator differs from G_{alpha,v} outside entry (1,1)");
      }
    }
  }
  const Element beta = diff(0, 0);
  const unsigned base_degree = alpha.front().has_field() ? alpha.front().field().degree() : 1;
  if (beta.is_zero() || min_poly_degree(beta, base_degree) < 2) {
    raise(ErrorKind::PreconditionViolated, "beta lies in base field");
  }
  if (alpha.front().is_zero()) raise(ErrorKind::PreconditionViolated, "alpha_1 must be nonzero");
  const Matrix vinv = inverse(vandermonde(f, alpha, g.cols()));
  auto r = gtrs_recognize(g, alpha, v);
  if (!r) raise(ErrorKind::VerificationFailed, "first block of G (V D)^{-1} is singular");
  E11Recognition out{r->spec, std::move(*r), vinv(0, 0).is_zero()};
  return out;
}

std::vector<Element> dual_grs_weight(std::span<const Element> alpha, std::span<const Element> u) {
  if (alpha.size() != u.size()) raise(ErrorKind::LengthMismatch, "alpha and u differ in length");
  require_distinct(alpha);
  std::vector<Element> w;
  w.reserve(alpha.size());
  for (std::size_t l = 0; l < alpha.size(); ++l) {
    Element d = u[l];
    for (std::size_t m = 0; m < alpha.size(); ++m) {
      if (m != l) d *= alpha[l] - alpha[m];
    }
    w.push_back(d.inverse());
  }
  return w;
}

AntidiagReport antidiag_product(const Matrix& g, std::span<const Element> alpha, std::span<const Element> v) {
  check_shape(g, alpha, v);
  const Field f = field_of_generator(g);
  const Index k = g.rows();
  const std::size_t n = alpha.size();
  const std::vector<Element> a = embed_all(alpha, f);
  const std::vector<Element> vv = embed_all(v, f);

  // A zero coordinate is punctured, weighted on the rest, then refilled with 0.
  std::optional<std::size_t> zero_at;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) zero_at = i;
  }
  std::vector<Element> ap, up;
  for (std::size_t i = 0; i < n; ++i) {
    if (zero_at && i == *zero_at) continue;
    ap.push_back(a[i]);
    up.push_back(a[i].pow(static_cast<std::uint64_t>(k)) * vv[i]);
  }
  std::vector<Element> wp = ap.empty() ? std::vector<Element>{} : dual_grs_weight(ap, up);
  std::vector<Element> w;
  for (std::size_t i = 0, j = 0; i < n; ++i) {
    w.push_back(zero_at && i == *zero_at ? f.zero() : wp[j++]);
  }

  AntidiagReport rep;
  rep.weights = Matrix(1, static_cast<Index>(n));
  for (std::size_t i = 0; i < n; ++i) rep.weights(0, static_cast<Index>(i)) = w[i];
  rep.product = vandermonde(f, a, k) * diagonal(f, w) * g.transpose();
  rep.zero_below = rep.zero_above = rep.antidiag_nonzero = true;
  for (Index i = 0; i < k; ++i) {
    for (Index j = 0; j < k; ++j) {
      const bool z = rep.product(i, j).is_zero();
      if (i + j == k - 1) {
        rep.antidiag_nonzero = rep.antidiag_nonzero && !z;
      } else if (i + j >= k) {
        rep.zero_below = rep.zero_below && z;
      } else {
        rep.zero_above = rep.zero_above && z;
      }
    }
  }
  return rep;
}

bool gtrs_antidiag_check(const Matrix& g, std::span<const Element> alpha, std::span<const Element> v) {
  return antidiag_product(g, alpha, v).strict();
}

bool gtrs_lemma_check(const Matrix& g, std::span<const Element> alpha, std::span<const Element> v) {
  check_shape(g, alpha, v);
  const Field f = field_of_generator(g);
  const Index k = g.rows();
  const Index n = g.cols();
  const Matrix full = scaled_vandermonde(f, alpha, v, n);
  const Matrix residue = g - full.topRows(k);
  Matrix stacked(n, n);
  stacked.topRows(n - k) = full.bottomRows(n - k);
  stacked.bottomRows(k) = residue;
  return rank(stacked) == n - k;
}

}  // namespace mdsforge
