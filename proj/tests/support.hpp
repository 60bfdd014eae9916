#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "mdsforge/field.hpp"
#include "mdsforge/gtrs.hpp"
#include "mdsforge/linalg.hpp"
#include "mdsforge/perturbed.hpp"

namespace mdsforge::testing {

inline std::vector<Element> ints(const Field& f, std::initializer_list<int> xs) {
  std::vector<Element> out;
  for (int x : xs) out.push_back(f.from_int(x));
  return out;
}

inline Matrix rows(const Field& f, std::initializer_list<std::initializer_list<const char*>> rs) {
  const auto nr = static_cast<Index>(rs.size());
  const auto nc = nr == 0 ? Index{0} : static_cast<Index>(rs.begin()->size());
  Matrix m(nr, nc);
  Index i = 0;
  for (const auto& r : rs) {
    Index j = 0;
    for (const char* s : r) m(i, j++) = f.parse_element(s);
    ++i;
  }
  return m;
}

inline Matrix random_matrix(const Field& f, Index r, Index c, std::mt19937_64& rng) {
  Matrix m(r, c);
  for (Index i = 0; i < r; ++i) {
    for (Index j = 0; j < c; ++j) m(i, j) = f.random(rng);
  }
  return m;
}

inline Index uniform(std::mt19937_64& rng, Index lo, Index hi) {
  return std::uniform_int_distribution<Index>(lo, hi)(rng);
}

/// n distinct elements of a prime field, in random order.
inline std::vector<Element> distinct_points(const Field& f, Index n, std::mt19937_64& rng) {
  std::vector<Element> all = f.elements();
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(static_cast<std::size_t>(n));
  return all;
}

inline std::vector<Element> nonzero_vector(const Field& f, Index n, std::mt19937_64& rng) {
  std::vector<Element> v;
  for (Index i = 0; i < n; ++i) v.push_back(f.random_nonzero(rng));
  return v;
}

/// Leibniz expansion over all permutations; only for n <= 6.
inline Element leibniz_det(const Matrix& m) {
  const Index n = m.rows();
  std::vector<Index> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  Element total = 0;
  do {
    int inversions = 0;
    for (Index i = 0; i < n; ++i) {
      for (Index j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    Element term = 1;
    for (Index i = 0; i < n; ++i) term = term * m(i, perm[static_cast<std::size_t>(i)]);
    total = inversions % 2 ? total - term : total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Minimum Hamming weight over all nonzero codewords, by enumerating F_q^k.
inline Index brute_min_distance(const Matrix& g, const Field& f) {
  const std::vector<Element> elems = f.elements();
  const Index k = g.rows();
  const Index n = g.cols();
  std::vector<std::size_t> digits(static_cast<std::size_t>(k), 0);
  Index best = n + 1;
  while (true) {
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == elems.size()) digits[i++] = 0;
    if (i == digits.size()) break;
    Index weight = 0;
    for (Index c = 0; c < n; ++c) {
      Element s = f.zero();
      for (Index r = 0; r < k; ++r) s += elems[digits[static_cast<std::size_t>(r)]] * g(r, c);
      weight += !s.is_zero();
    }
    best = std::min(best, weight);
  }
  return best;
}

/// Random GTRS spec over F_q with distinct (h, t) hooks.
inline GtrsSpec random_gtrs_spec(std::mt19937_64& rng) {
  static const std::uint64_t primes[] = {7, 11, 13};
  const Field f = Field::make(primes[uniform(rng, 0, 2)]);
  const auto q = static_cast<Index>(f.characteristic());
  const Index n = uniform(rng, 3, q);
  const Index k = uniform(rng, 1, n - 1);
  GtrsSpec s{f, distinct_points(f, n, rng), nonzero_vector(f, n, rng), k, {}};
  for (Index h = 0; h < k; ++h) {
    for (Index t = 1; t <= n - k; ++t) {
      if (uniform(rng, 0, 3) == 0) s.hooks.push_back({h, t, f.random_nonzero(rng)});
    }
  }
  return s;
}

/// A random first-column or single-entry perturbation over F_{q^2}.
struct RandomFamily {
  FamilyKind kind;
  GrsSpec spec;
  PerturbationSpec pert;
};

inline RandomFamily random_family(std::mt19937_64& rng) {
  static const std::uint64_t primes[] = {7, 11, 13};
  const std::uint64_t p = primes[uniform(rng, 0, 2)];
  const Field base = Field::make(p);
  const Field ext = Field::make(p, 2);
  const auto q = static_cast<Index>(p);
  const bool first_column = uniform(rng, 0, 1) == 0;
  const bool with_inf = uniform(rng, 0, 1) == 0;
  const Index n = uniform(rng, 7, with_inf ? q + 1 : q);
  const Index k = uniform(rng, 3, (n - 1) / 2);
  const Index finite = with_inf ? n - 1 : n;

  std::vector<Element> pts = base.elements();
  // Column 1 must avoid 0 (and 1 for the first-column family).
  std::vector<Element> head;
  for (const auto& e : pts) {
    if (!e.is_zero() && !(first_column && e.is_one())) head.push_back(e);
  }
  const Element a1 = head[static_cast<std::size_t>(uniform(rng, 0, static_cast<Index>(head.size()) - 1))];
  pts.erase(std::find(pts.begin(), pts.end(), a1));
  std::shuffle(pts.begin(), pts.end(), rng);
  std::vector<EvalPoint> alpha{a1};
  for (Index i = 1; i < finite; ++i) alpha.emplace_back(pts[static_cast<std::size_t>(i - 1)]);
  if (with_inf) alpha.push_back(EvalPoint::infinity());

  Element beta = ext.random(rng);
  while (min_poly_degree(beta) < 2) beta = ext.random(rng);

  RandomFamily r{first_column ? FamilyKind::FirstColumn : FamilyKind::SingleE11,
                 {base, alpha, nonzero_vector(base, n, rng), k},
                 {{}, beta}};
  if (first_column) {
    const Index start = uniform(rng, 0, k - 3);
    for (Index row = 0; row < k; ++row) {
      const bool in_run = row >= start && row < start + 3;
      if (in_run || uniform(rng, 0, 2) == 0) r.pert.positions.push_back({row, 0, 1});
    }
  } else {
    const Index col = with_inf && uniform(rng, 0, 1) == 0 ? n - 1 : 0;
    r.pert.positions.push_back({0, col, 1});
  }
  return r;
}

}  // namespace mdsforge::testing
