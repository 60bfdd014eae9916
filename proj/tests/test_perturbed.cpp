#include <gtest/gtest.h>

#include <random>

#include "mdsforge/code.hpp"
#include "mdsforge/perturbed.hpp"
#include "support.hpp"

using namespace mdsforge;
using namespace mdsforge::testing;

namespace {

const Field& f49() {
  static const Field f = Field::parse("p=7,b=2,mod=x^2+2");
  return f;
}

GrsSpec spec7(std::initializer_list<int> alpha, Index k) {
  const Field f = Field::make(7);
  const auto a = ints(f, alpha);
  return {f, to_points(a), std::vector<Element>(a.size(), f.one()), k};
}

std::string precondition_message(FamilyKind kind, const GrsSpec& spec, const PerturbationSpec& pert,
                                 FamilyOptions opt = {}) {
  try {
    construct_family(kind, spec, pert, opt);
  } catch (const Error& e) {
    return e.kind() == ErrorKind::PreconditionViolated ? e.what() : std::string("other: ") + e.what();
  }
  return "accepted";
}

// Coefficient of beta in g_j * g_{j+2} - g_{j+1}^2 at each column, recovered
// by evaluating at beta = 0, 1, 2 in the base field.
std::vector<Index> linear_columns_by_interpolation(const GrsSpec& spec, const std::vector<Position>& pos,
                                                   Index j) {
  const Field& f = spec.field;
  const Matrix g = build_grs_generator(spec);
  auto entry = [&](Index r, Index c, const Element& b) {
    Element x = g(r, c);
    for (const Position& p : pos) {
      if (p.row == r && p.col == c) x += b;
    }
    return x;
  };
  std::vector<Index> out;
  for (Index c = 0; c < g.cols(); ++c) {
    Element e[3];
    for (int b = 0; b < 3; ++b) {
      const Element beta = f.from_int(b);
      e[b] = entry(j, c, beta) * entry(j + 2, c, beta) - entry(j + 1, c, beta) * entry(j + 1, c, beta);
    }
    const Element c2 = (e[2] - f.from_int(2) * e[1] + e[0]) / f.from_int(2);
    const Element c1 = e[1] - e[0] - c2;
    if (!c1.is_zero()) out.push_back(c);
  }
  return out;
}

}  // namespace

TEST(GrsGenerator, EntriesAreScaledPowers) {
  const Field f = Field::make(11);
  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 50; ++iter) {
    const Index n = uniform(rng, 2, 10);
    const Index k = uniform(rng, 1, n - 1);
    std::vector<EvalPoint> alpha = to_points(distinct_points(f, n - 1, rng));
    alpha.push_back(EvalPoint::infinity());
    const GrsSpec s{f, alpha, nonzero_vector(f, n, rng), k};
    const Matrix g = build_grs_generator(s);
    for (Index r = 0; r < k; ++r) {
      for (Index c = 0; c < n; ++c) {
        const Element v = s.v[static_cast<std::size_t>(c)];
        const EvalPoint& a = s.alpha[static_cast<std::size_t>(c)];
        const Element expected = a.is_infinity() ? (r == k - 1 ? v : f.zero())
                                                 : v * a.value().pow(static_cast<std::uint64_t>(r));
        EXPECT_EQ(g(r, c), expected);
      }
    }
  }
}

TEST(GrsGenerator, ValidationErrors) {
  const Field f = Field::make(7);
  EXPECT_THROW(validate(spec7({1, 2, 2}, 2)), Error);
  EXPECT_THROW(validate(spec7({1, 2, 3}, 4)), Error);
  GrsSpec zero_v = spec7({1, 2, 3}, 2);
  zero_v.v[1] = f.zero();
  EXPECT_THROW(validate(zero_v), Error);
  GrsSpec short_v = spec7({1, 2, 3}, 2);
  short_v.v.pop_back();
  EXPECT_THROW(validate(short_v), Error);
}

TEST(Symbolic, EvaluationEqualsNumericPerturbation) {
  const Field base = Field::make(7);
  const Field ext = Field::make(7, 4);
  std::mt19937_64 rng(32);
  for (int iter = 0; iter < 30; ++iter) {
    const GrsSpec s{base, to_points(distinct_points(base, 6, rng)), nonzero_vector(base, 6, rng), 3};
    std::vector<Position> pos{{0, 0, 1}, {2, 3, 2}, {1, 5, 3}};
    const Element beta = ext.random(rng);
    const PerturbedCode pc = build_perturbed_code(s, {pos, beta});
    Matrix expected = lift(ext, build_grs_generator(s));
    for (const Position& p : pos) expected(p.row, p.col) += beta.pow(p.exponent);
    // The code constructor may keep the generator as given; compare row spaces.
    EXPECT_TRUE(same_row_space(pc.code.generator(), expected));
    EXPECT_TRUE(equal(poly_eval_matrix(symbolic_perturbation(s, pos), beta), expected));
  }
}

TEST(Symbolic, RejectsBadPositions) {
  const GrsSpec s = spec7({1, 2, 3, 4, 5, 6, 0}, 3);
  EXPECT_THROW(symbolic_perturbation(s, std::vector<Position>{}), Error);
  EXPECT_THROW(symbolic_perturbation(s, std::vector<Position>{{3, 0, 1}}), Error);
  EXPECT_THROW(symbolic_perturbation(s, std::vector<Position>{{0, 7, 1}}), Error);
  EXPECT_THROW(symbolic_perturbation(s, std::vector<Position>{{0, 1, 1}, {0, 1, 2}}), Error);
}

TEST(Certificate, DegreeBoundImpliesMds) {
  std::mt19937_64 rng(33);
  int certified = 0;
  for (int iter = 0; iter < 200 && certified < 40; ++iter) {
    const Field base = Field::make(iter % 2 ? 11 : 13);
    const Field ext = Field::make(base.characteristic(), 9);
    const Index n = uniform(rng, 4, 9);
    const Index k = uniform(rng, 2, std::min<Index>(4, n - 1));
    const GrsSpec s{base, to_points(distinct_points(base, n, rng)), nonzero_vector(base, n, rng), k};
    std::vector<Position> pos;
    for (Index r = 0; r < k; ++r) {
      for (Index c = 0; c < n; ++c) {
        if (uniform(rng, 0, 4) == 0) pos.push_back({r, c, static_cast<unsigned>(uniform(rng, 1, 2))});
      }
    }
    if (pos.empty()) continue;
    const PerturbedCode pc = build_perturbed_code(s, {pos, ext.random_nonzero(rng)});
    if (!pc.certified_mds) continue;
    ++certified;
    EXPECT_LT(pc.certificate.max_degree, static_cast<int>(pc.beta_degree));
    EXPECT_TRUE(is_mds(pc.code).mds);
    // Constant terms of the symbolic minors are the GRS minors.
    const PolyMatrix sym = symbolic_perturbation(s, pos);
    const Matrix g = build_grs_generator(s);
    for (SubsetWalker w(n, k); !w.done(); w.next()) {
      const auto cols = std::span<const Index>(w.current());
      const Element constant = poly_det(columns_submatrix(sym, cols)).coefficient(0);
      EXPECT_EQ(constant, det(columns_submatrix(g, cols)));
      EXPECT_FALSE(constant.is_zero());
    }
  }
  EXPECT_EQ(certified, 40);
}

TEST(Certificate, BaseFieldBetaIsRejected) {
  const GrsSpec s = spec7({1, 2, 3, 4, 5, 6, 0}, 3);
  try {
    build_perturbed_code(s, {{{0, 0, 1}}, f49().from_int(3)});
    FAIL() << "expected PreconditionViolated";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PreconditionViolated);
    EXPECT_NE(std::string(e.what()).find("beta lies in base field"), std::string::npos);
  }
}

TEST(Prop1Condition, LinearColumnsMatchInterpolation) {
  std::mt19937_64 rng(34);
  const Field f = Field::make(11);
  for (int iter = 0; iter < 100; ++iter) {
    const Index n = uniform(rng, 7, 11);
    const Index k = uniform(rng, 3, (n - 1) / 2);
    const GrsSpec s{f, to_points(distinct_points(f, n, rng)), nonzero_vector(f, n, rng), k};
    std::vector<Position> pos;
    for (Index r = 0; r < k; ++r) {
      for (Index c = 0; c < n; ++c) {
        if (uniform(rng, 0, 5) == 0) pos.push_back({r, c, 1});
      }
    }
    if (pos.empty()) continue;
    for (Index j = 0; j + 2 < k; ++j) {
      EXPECT_EQ(prop1_linear_columns(s, pos, j), linear_columns_by_interpolation(s, pos, j));
      EXPECT_EQ(check_prop1_condition(s, pos, j), !linear_columns_by_interpolation(s, pos, j).empty());
    }
  }
}

TEST(Prop1Condition, WorkedExampleColumns) {
  const GrsSpec s11{Field::make(11), to_points(ints(Field::make(11), {1, 2, 3, 4, 5, 6, 7})),
                    ints(Field::make(11), {1, 1, 1, 1, 1, 1, 1}), 3};
  const std::vector<Position> pos{{0, 0, 1}, {0, 1, 1}, {0, 4, 1}};
  EXPECT_EQ(prop1_linear_columns(s11, pos, 0), (std::vector<Index>{0, 1, 4}));
  EXPECT_EQ(prop1_linear_columns(s11, pos, 0), linear_columns_by_interpolation(s11, pos, 0));
}

TEST(Families, PreconditionMessages) {
  const Field ext = f49();
  const Element t = ext.generator();
  const GrsSpec g = spec7({2, 3, 4, 5, 6, 1, 0}, 3);
  const GrsSpec g_a1_one = spec7({1, 2, 3, 4, 5, 6, 0}, 3);
  const std::vector<Position> col1{{0, 0, 1}, {1, 0, 1}, {2, 0, 1}};

  EXPECT_EQ(precondition_message(FamilyKind::FirstColumn, spec7({2, 3, 4, 5, 6, 1}, 3), {col1, t}),
            "k must satisfy 3 <= k <= (n-1)/2");
  EXPECT_EQ(precondition_message(FamilyKind::FirstColumn, g, {col1, ext.from_int(2)}), "beta lies in base field");
  EXPECT_EQ(precondition_message(FamilyKind::FirstColumn, g, {{{0, 0, 2}, {1, 0, 1}, {2, 0, 1}}, t}),
            "all exponents must be 1");
  EXPECT_EQ(precondition_message(FamilyKind::FirstColumn, g, {{{0, 0, 1}, {1, 1, 1}, {2, 0, 1}}, t}),
            "positions must all lie in column 1");
  EXPECT_EQ(precondition_message(FamilyKind::FirstColumn, g, {{{0, 0, 1}, {2, 0, 1}}, t}),
            "rows must contain three consecutive indices");
  EXPECT_EQ(precondition_message(FamilyKind::FirstColumn, g_a1_one, {col1, t}), "alpha_1 must not be 0, 1 or inf");
  EXPECT_EQ(precondition_message(FamilyKind::SingleE11, g, {{{0, 0, 1}, {1, 0, 1}}, t}),
            "exactly one perturbed position");
  EXPECT_EQ(precondition_message(FamilyKind::SingleE11, g, {{{1, 0, 1}}, t}),
            "the perturbed position must be in row 1");
  EXPECT_EQ(precondition_message(FamilyKind::SingleE11, spec7({0, 2, 3, 4, 5, 6, 1}, 3), {{{0, 0, 1}}, t}),
            "alpha_1 must be nonzero");
  EXPECT_EQ(precondition_message(FamilyKind::SingleE11, g, {{{0, 3, 1}}, t}),
            "single position outside column 1 needs the unverified flag");
  EXPECT_EQ(precondition_message(FamilyKind::SingleE11, g, {{{0, 3, 1}}, t}, {true, std::nullopt, kDefaultSubsetCap}),
            "accepted");
  EXPECT_EQ(precondition_message(FamilyKind::Prop1, g, {{{0, 0, 1}}, t}),
            "minimal polynomial degree of beta must exceed 4k");
}

TEST(Families, Prop1NeedsALinearEntry) {
  const Field base = Field::make(11);
  const Field ext = Field::make(11, 13);
  const auto ones = ints(base, {1, 1, 1, 1, 1, 1, 1});
  // At alpha = 0 the x^2 row vanishes, so beta in row 1 there has no partner.
  const GrsSpec at_zero{base, to_points(ints(base, {0, 1, 2, 3, 4, 5, 6})), ones, 3};
  EXPECT_EQ(precondition_message(FamilyKind::Prop1, at_zero, {{{0, 0, 1}}, ext.generator()}),
            "no rows j, j+1, j+2 give an entry with a nonzero coefficient of beta");
  const GrsSpec s{base, to_points(ints(base, {1, 2, 3, 4, 5, 6, 7})), ones, 3};
  const FamilyResult r = construct_family(FamilyKind::Prop1, s, {{{0, 0, 1}, {0, 1, 1}, {0, 4, 1}}, ext.generator()});
  EXPECT_EQ(r.grs.verdict, GrsVerdict::NonGRS);
  EXPECT_EQ(r.row_j, 0);
  EXPECT_EQ(r.v_retries, 0u);
  EXPECT_TRUE(r.certified_mds);
}

TEST(Families, RandomConstructionsAreMdsAndNonGrs) {
  std::mt19937_64 rng(35);
  for (int iter = 0; iter < 30; ++iter) {
    const RandomFamily rf = random_family(rng);
    const FamilyResult r = construct_family(rf.kind, rf.spec, rf.pert);
    EXPECT_TRUE(r.certified_mds);
    EXPECT_EQ(r.grs.verdict, GrsVerdict::NonGRS);
    ASSERT_TRUE(r.grs.square_dim.has_value());
    EXPECT_GE(*r.grs.square_dim, 2 * rf.spec.k);
    EXPECT_EQ(schur_square(r.code).dimension(), *r.grs.square_dim);
  }
}

TEST(Families, KindNames) {
  EXPECT_EQ(to_string(FamilyKind::Prop1), "prop1");
  EXPECT_EQ(to_string(FamilyKind::FirstColumn), "first_column");
  EXPECT_EQ(to_string(FamilyKind::SingleE11), "single_e11");
}
