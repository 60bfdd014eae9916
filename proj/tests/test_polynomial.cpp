#include <gtest/gtest.h>

#include <random>

#include "mdsforge/polynomial.hpp"
#include "support.hpp"

using namespace mdsforge;
using mdsforge::testing::ints;

namespace {

Poly random_poly(const Field& f, int max_degree, std::mt19937_64& rng) {
  std::vector<Element> c;
  const int d = std::uniform_int_distribution<int>(-1, max_degree)(rng);
  for (int i = 0; i <= d; ++i) c.push_back(f.random(rng));
  return Poly(std::move(c));
}

}  // namespace

TEST(Polynomial, ZeroAndTrimming) {
  const Field f = Field::make(7);
  EXPECT_TRUE(Poly().is_zero());
  EXPECT_EQ(Poly().degree(), kZeroPolynomialDegree);
  EXPECT_EQ(Poly(ints(f, {3, 0, 0})).degree(), 0);
  EXPECT_EQ(Poly(ints(f, {0, 0, 7})), Poly());
  EXPECT_EQ(Poly::monomial(f.from_int(2), 3).coefficient(3), f.from_int(2));
  EXPECT_TRUE(Poly::monomial(f.from_int(2), 3).coefficient(9).is_zero());
}

TEST(Polynomial, DifferenceOfSquares) {
  const Field f = Field::make(7);
  const Poly a(ints(f, {1, 1}));
  const Poly b(ints(f, {1, -1}));
  EXPECT_EQ(a * b, Poly(ints(f, {1, 0, -1})));
  EXPECT_EQ(a + b, Poly(ints(f, {2})));
  EXPECT_EQ(a - a, Poly());
}

TEST(Polynomial, DivisionIdentityOnRandomInputs) {
  const Field f = Field::make(11, 2);
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 300; ++iter) {
    const Poly a = random_poly(f, 8, rng);
    Poly d = random_poly(f, 4, rng);
    if (d.is_zero()) continue;
    Poly q, r;
    divmod(a, d, q, r);
    EXPECT_EQ(q * d + r, a);
    EXPECT_LT(r.degree(), d.degree());
    EXPECT_EQ(exact_quotient(a * d, d), a);
  }
}

TEST(Polynomial, InexactQuotientThrows) {
  const Field f = Field::make(7);
  EXPECT_THROW(exact_quotient(Poly(ints(f, {1, 0, 1})), Poly(ints(f, {1, 1}))), Error);
  Poly q, r;
  EXPECT_THROW(divmod(Poly(ints(f, {1})), Poly(), q, r), Error);
}

TEST(Polynomial, EvaluationMatchesPowerSum) {
  const Field f = Field::make(13);
  std::mt19937_64 rng(4);
  for (int iter = 0; iter < 200; ++iter) {
    const Poly p = random_poly(f, 6, rng);
    const Element x = f.random(rng);
    Element expected = f.zero();
    for (int i = 0; i <= p.degree(); ++i) expected += p.coefficient(i) * x.pow(static_cast<std::uint64_t>(i));
    EXPECT_EQ(p.evaluate(x), expected);
  }
}

TEST(Polynomial, EvaluationIsARingHomomorphism) {
  const Field base = Field::make(7);
  const Field ext = Field::make(7, 3);
  std::mt19937_64 rng(5);
  auto lift = [&](const Element& c) { return embed(c, ext); };
  for (int iter = 0; iter < 100; ++iter) {
    const Poly a = random_poly(base, 5, rng), b = random_poly(base, 5, rng);
    const Element x = ext.random(rng);
    EXPECT_EQ((a * b).evaluate(x, lift), a.evaluate(x, lift) * b.evaluate(x, lift));
    EXPECT_EQ((a + b).evaluate(x, lift), a.evaluate(x, lift) + b.evaluate(x, lift));
  }
}

TEST(Polynomial, PrintsNonzeroTerms) {
  const Field f = Field::make(7);
  EXPECT_EQ(Poly(ints(f, {1, 0, 2})).to_string(), "(1) + (2)*x^2");
  EXPECT_EQ(Poly().to_string(), "0");
}
