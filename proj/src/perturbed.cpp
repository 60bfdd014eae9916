#include "mdsforge/perturbed.hpp"

#include <algorithm>
#include <string>

namespace mdsforge {

namespace {

std::string pos_string(const Position& p) {
  return "(" + std::to_string(p.row + 1) + "," + std::to_string(p.col + 1) + ")";
}

void require(bool ok, const std::string& clause) {
  if (!ok) raise(ErrorKind::PreconditionViolated, clause);
}

void check_positions(const GrsSpec& spec, std::span<const Position> positions) {
  if (positions.empty()) raise(ErrorKind::SpecInvalid, "perturbation needs at least one position");
  for (std::size_t i = 0; i < positions.size(); ++i) {
    const Position& p = positions[i];
    if (p.row < 0 || p.row >= spec.k || p.col < 0 || p.col >= spec.length()) {
      raise(ErrorKind::IndexOutOfRange, "position " + pos_string(p) + " outside the " +
                                            std::to_string(spec.k) + "x" +
                                            std::to_string(spec.length()) + " generator");
    }
    if (p.exponent < 1) raise(ErrorKind::SpecInvalid, "exponents must be at least 1");
    for (std::size_t j = 0; j < i; ++j) {
      if (positions[j].row == p.row && positions[j].col == p.col) {
        raise(ErrorKind::SpecInvalid, "position " + pos_string(p) + " listed twice");
      }
    }
  }
}

unsigned beta_degree_over(const GrsSpec& spec, const Element& beta) {
  if (!beta.has_field()) raise(ErrorKind::ContextMismatch, "beta needs a field");
  const Field& big = beta.field();
  const Field& small = spec.field;
  if (big.characteristic() != small.characteristic() || big.degree() % small.degree() != 0) {
    raise(ErrorKind::ContextMismatch, small.spec() + " is not a subfield of " + big.spec());
  }
  if (!small.is_prime_field() && big != small) {
    raise(ErrorKind::NoEmbedding, "only prime base fields embed into extensions");
  }
  return min_poly_degree(beta, small.degree());
}

bool finite_is(const EvalPoint& a, int value) {
  return !a.is_infinity() && a.value() == Element(value);
}

}  // namespace

void validate(const GrsSpec& spec) {
  if (!spec.field.valid()) raise(ErrorKind::SpecInvalid, "GRS spec has no field");
  const Index n = spec.length();
  if (static_cast<Index>(spec.v.size()) != n) {
    raise(ErrorKind::SpecInvalid, "alpha has " + std::to_string(n) + " points but v has " +
                                      std::to_string(spec.v.size()) + " entries");
  }
  if (spec.k < 1 || spec.k >= n) {
    raise(ErrorKind::SpecInvalid, "need 1 <= k < n, got k=" + std::to_string(spec.k) +
                                      ", n=" + std::to_string(n));
  }
  for (const auto& a : spec.alpha) {
    if (!a.is_infinity() && a.value().has_field() && a.value().field() != spec.field) {
      raise(ErrorKind::ContextMismatch, "alpha entry outside " + spec.field.spec());
    }
  }
  for (std::size_t i = 0; i < spec.v.size(); ++i) {
    if (spec.v[i].is_zero()) raise(ErrorKind::SpecInvalid, "v_" + std::to_string(i + 1) + " is zero");
    if (spec.v[i].has_field() && spec.v[i].field() != spec.field) {
      raise(ErrorKind::ContextMismatch, "v entry outside " + spec.field.spec());
    }
  }
  require_distinct(std::span<const EvalPoint>(spec.alpha));
}

Matrix build_grs_generator(const GrsSpec& spec) {
  validate(spec);
  Matrix g = vandermonde(spec.field, spec.alpha, spec.k);
  for (Index j = 0; j < g.cols(); ++j) {
    const Element vj = spec.v[static_cast<std::size_t>(j)].in(spec.field);
    for (Index i = 0; i < g.rows(); ++i) g(i, j) *= vj;
  }
  return g;
}

PolyMatrix symbolic_perturbation(const GrsSpec& spec, std::span<const Position> positions) {
  const Matrix g = build_grs_generator(spec);
  check_positions(spec, positions);
  PolyMatrix pm = to_poly_matrix(g);
  for (const Position& p : positions) {
    pm(p.row, p.col) += Poly::monomial(spec.field.one(), static_cast<int>(p.exponent));
  }
  return pm;
}

MdsCertificate mds_certificate(const PolyMatrix& pm, Index k, std::uint64_t cap) {
  if (pm.rows() != k) {
    raise(ErrorKind::DimensionMismatch, "certificate expects " + std::to_string(k) + " rows, got " +
                                            std::to_string(pm.rows()));
  }
  const std::uint64_t total = binomial(static_cast<std::uint64_t>(pm.cols()), static_cast<std::uint64_t>(k));
  if (total > cap) {
    raise(ErrorKind::ResourceLimit, std::to_string(total) + " column subsets exceed cap " + std::to_string(cap));
  }
  MdsCertificate out;
  for (SubsetWalker w(pm.cols(), k); !w.done(); w.next()) {
    const Poly d = poly_det(columns_submatrix<Poly>(pm, w.current()));
    ++out.subsets;
    if (d.is_zero()) out.all_nonzero = false;
    out.max_degree = std::max(out.max_degree, d.degree());
  }
  return out;
}

PerturbedCode build_perturbed_code(const GrsSpec& spec, const PerturbationSpec& pert, std::uint64_t cap) {
  validate(spec);
  check_positions(spec, pert.positions);
  const unsigned dbeta = beta_degree_over(spec, pert.beta);
  require(dbeta > 1, "beta lies in base field");
  const Field& big = pert.beta.field();
  Matrix g = lift(big, build_grs_generator(spec));
  for (const Position& p : pert.positions) g(p.row, p.col) += pert.beta.pow(p.exponent);
  const MdsCertificate cert = mds_certificate(symbolic_perturbation(spec, pert.positions), spec.k, cap);
  const bool certified = cert.all_nonzero && cert.max_degree < static_cast<int>(dbeta);
  return PerturbedCode{LinearCode(big, g), certified, cert, dbeta};
}

std::vector<Index> prop1_linear_columns(const GrsSpec& spec, std::span<const Position> positions, Index j) {
  if (j < 0 || j + 2 >= spec.k) {
    raise(ErrorKind::IndexOutOfRange, "rows " + std::to_string(j + 1) + ".." + std::to_string(j + 3) +
                                          " do not exist for k=" + std::to_string(spec.k));
  }
  for (const Position& p : positions) {
    require(p.exponent == 1, "all exponents must be 1");
  }
  const PolyMatrix pm = symbolic_perturbation(spec, positions);
  std::vector<Index> cols;
  for (Index l = 0; l < pm.cols(); ++l) {
    const Poly e = pm(j, l) * pm(j + 2, l) - pm(j + 1, l) * pm(j + 1, l);
    if (!e.coefficient(1).is_zero()) cols.push_back(l);
  }
  return cols;
}

bool check_prop1_condition(const GrsSpec& spec, std::span<const Position> positions, Index j) {
  return !prop1_linear_columns(spec, positions, j).empty();
}

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Prop1: return "prop1";
    case FamilyKind::FirstColumn: return "first_column";
    case FamilyKind::SingleE11: return "single_e11";
  }
  return "?";
}

namespace {

// Builds, then checks MDS and NonGRS directly.  Returns false when the code
// is MDS but not shown NonGRS, which only the Prop1 retry loop tolerates.
bool build_and_verify(const GrsSpec& spec, const PerturbationSpec& pert, const FamilyOptions& opt,
                      std::optional<FamilyResult>& out) {
  PerturbedCode pc = build_perturbed_code(spec, pert, opt.cap);
  GrsTestResult t = grs_test(pc.code, opt.cap);
  if (pc.certified_mds && !t.mds.mds) {
    raise(ErrorKind::VerificationFailed, "certified code failed the minor check");
  }
  if (!t.mds.mds) raise(ErrorKind::VerificationFailed, "constructed code is not MDS");
  out.emplace(FamilyResult{pc.code, spec, pert, pc.certificate, pc.certified_mds, t, std::nullopt, 0, false});
  return t.verdict == GrsVerdict::NonGRS;
}

}  // namespace

FamilyResult construct_family(FamilyKind kind, const GrsSpec& spec, const PerturbationSpec& pert,
                              const FamilyOptions& opt) {
  validate(spec);
  check_positions(spec, pert.positions);
  const Index n = spec.length();
  const Index k = spec.k;
  require(k >= 3 && 2 * k <= n - 1, "k must satisfy 3 <= k <= (n-1)/2");
  const unsigned dbeta = beta_degree_over(spec, pert.beta);
  require(dbeta > 1, "beta lies in base field");
  for (const Position& p : pert.positions) require(p.exponent == 1, "all exponents must be 1");

  bool unverified = false;
  std::optional<FamilyResult> result;

  switch (kind) {
    case FamilyKind::Prop1: {
      std::optional<Index> row = opt.row_j;
      if (row) {
        require(check_prop1_condition(spec, pert.positions, *row),
                "e has no entry with a nonzero coefficient of beta for j=" + std::to_string(*row + 1));
      } else {
        for (Index j = 0; j + 2 < k && !row; ++j) {
          if (check_prop1_condition(spec, pert.positions, j)) row = j;
        }
        require(row.has_value(), "no rows j, j+1, j+2 give an entry with a nonzero coefficient of beta");
      }
      if (dbeta <= static_cast<unsigned>(4 * k)) {
        require(opt.allow_unverified, "minimal polynomial degree of beta must exceed 4k");
        unverified = true;
      }
      const Index s1 = prop1_linear_columns(spec, pert.positions, *row).front();
      GrsSpec trial = spec;
      unsigned retries = 0;
      bool ok = build_and_verify(trial, pert, opt, result);
      // The proof only promises some v; walk v_{s1} through F_q^* in
      // coefficient order until the square code grows.
      const Element original = spec.v[static_cast<std::size_t>(s1)].in(spec.field);
      if (!ok) {
        for (const Element& candidate : spec.field.elements()) {
          if (candidate.is_zero() || candidate == original) continue;
          trial.v[static_cast<std::size_t>(s1)] = candidate;
          ++retries;
          if ((ok = build_and_verify(trial, pert, opt, result))) break;
        }
      }
      if (!ok) raise(ErrorKind::VerificationFailed, "no choice of v_s1 produced a non-GRS code");
      result->row_j = row;
      result->v_retries = retries;
      break;
    }
    case FamilyKind::FirstColumn: {
      std::vector<Index> rows;
      for (const Position& p : pert.positions) {
        require(p.col == 0, "positions must all lie in column 1");
        rows.push_back(p.row);
      }
      std::sort(rows.begin(), rows.end());
      bool run = false;
      for (std::size_t i = 0; i + 2 < rows.size(); ++i) {
        run = run || (rows[i + 1] == rows[i] + 1 && rows[i + 2] == rows[i] + 2);
      }
      require(run, "rows must contain three consecutive indices");
      const EvalPoint& a1 = spec.alpha.front();
      require(!a1.is_infinity() && !finite_is(a1, 0) && !finite_is(a1, 1), "alpha_1 must not be 0, 1 or inf");
      if (!build_and_verify(spec, pert, opt, result)) {
        raise(ErrorKind::VerificationFailed, "first-column code did not test NonGRS");
      }
      break;
    }
    case FamilyKind::SingleE11: {
      require(pert.positions.size() == 1, "exactly one perturbed position");
      const Position& p = pert.positions.front();
      require(p.row == 0, "the perturbed position must be in row 1");
      const EvalPoint& a = spec.alpha[static_cast<std::size_t>(p.col)];
      if (p.col == 0 || a.is_infinity()) {
        require(a.is_infinity() || !finite_is(a, 0), "alpha_1 must be nonzero");
      } else {
        require(opt.allow_unverified, "single position outside column 1 needs the unverified flag");
        require(!finite_is(a, 0), "alpha at the perturbed column must be nonzero");
        unverified = true;
      }
      if (!build_and_verify(spec, pert, opt, result)) {
        raise(ErrorKind::VerificationFailed, "single-entry code did not test NonGRS");
      }
      break;
    }
  }
  result->unverified_by_theory = unverified;
  return std::move(*result);
}

}  // namespace mdsforge
