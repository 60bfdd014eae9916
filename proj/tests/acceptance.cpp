// One PASS/FAIL line per acceptance criterion.  Exit status is the number of
// failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "mdsforge/code.hpp"
#include "mdsforge/golden.hpp"
#include "mdsforge/gtrs.hpp"
#include "mdsforge/perturbed.hpp"
#include "support.hpp"

using namespace mdsforge;
using namespace mdsforge::testing;

namespace {

constexpr double kExample1Seconds = 5.0;
constexpr double kExample2Seconds = 1.0;
constexpr double kSchurSuiteSeconds = 60.0;

int failures = 0;

void report(int id, bool pass, const std::string& what, const std::string& detail) {
  std::printf("%s [%d] %s", pass ? "PASS" : "FAIL", id, what.c_str());
  if (!detail.empty()) std::printf(" (%s)", detail.c_str());
  std::printf("\n");
  failures += !pass;
}

double seconds(const std::function<void()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  body();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Runs one reference case and folds its checks into a single verdict.
bool golden(const std::string& name, std::string& detail) {
  const auto outcomes = run_golden({name});
  const GoldenOutcome& o = outcomes.front();
  int ok = 0;
  std::string bad;
  for (const auto& c : o.checks) {
    if (c.pass) {
      ++ok;
    } else if (bad.empty()) {
      bad = c.what + (c.detail.empty() ? "" : ": " + c.detail);
    }
  }
  detail = std::to_string(ok) + "/" + std::to_string(o.checks.size()) + " checks";
  if (!bad.empty()) detail += ", first mismatch: " + bad;
  return o.pass();
}

void timed_golden(int id, const std::string& name, const std::string& what, double limit) {
  std::string detail;
  bool pass = false;
  const double t = seconds([&] { pass = golden(name, detail); });
  std::ostringstream os;
  os << detail;
  if (limit > 0) os << ", " << t << " s of " << limit << " s";
  report(id, pass && (limit <= 0 || t < limit), what, os.str());
}

void criterion6() {
  std::mt19937_64 rng(606);
  int grs_ok = 0, fam_ok = 0;
  std::string first_bad;
  const double t = seconds([&] {
    static const std::uint64_t primes[] = {7, 11, 13};
    for (int i = 0; i < 100; ++i) {
      const Field f = Field::make(primes[uniform(rng, 0, 2)]);
      const Index n = uniform(rng, 7, static_cast<Index>(f.characteristic()));
      const Index k = uniform(rng, 3, (n - 1) / 2);
      const GrsSpec s{f, to_points(distinct_points(f, n, rng)), nonzero_vector(f, n, rng), k};
      const Index dim = schur_square(LinearCode(f, build_grs_generator(s))).dimension();
      grs_ok += dim == 2 * k - 1;
      if (dim != 2 * k - 1 && first_bad.empty()) first_bad = "GRS square " + std::to_string(dim);
    }
    for (int i = 0; i < 100; ++i) {
      const RandomFamily rf = random_family(rng);
      try {
        const FamilyResult r = construct_family(rf.kind, rf.spec, rf.pert);
        const Index dim = schur_square(r.code).dimension();
        fam_ok += dim >= 2 * rf.spec.k;
      } catch (const Error& e) {
        if (first_bad.empty()) first_bad = e.what();
      }
    }
  });
  std::ostringstream os;
  os << grs_ok << "/100 GRS with dim 2k-1, " << fam_ok << "/100 perturbed with dim >= 2k, " << t << " s";
  if (!first_bad.empty()) os << ", first failure: " << first_bad;
  report(6, grs_ok == 100 && fam_ok == 100 && t < kSchurSuiteSeconds, "Schur criterion property suite", os.str());
}

void criterion7() {
  std::mt19937_64 rng(707);
  int certified = 0, mds = 0, constant_ok = 0, attempts = 0;
  while (certified < 100 && attempts < 5000) {
    ++attempts;
    const Field base = Field::make(attempts % 2 ? 11 : 13);
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
    mds += is_mds(pc.code).mds;
    const PolyMatrix sym = symbolic_perturbation(s, pos);
    const Matrix g = build_grs_generator(s);
    bool all = true;
    for (SubsetWalker w(n, k); !w.done(); w.next()) {
      const auto cols = std::span<const Index>(w.current());
      const Element c0 = poly_det(columns_submatrix(sym, cols)).coefficient(0);
      all = all && c0 == det(columns_submatrix(g, cols)) && !c0.is_zero();
    }
    constant_ok += all;
  }
  std::ostringstream os;
  os << certified << " certified, " << mds << " pass the minor check, " << constant_ok
     << " with GRS constant terms on every minor";
  report(7, certified == 100 && mds == 100 && constant_ok == 100, "certificate soundness property suite", os.str());
}

void criterion8() {
  std::mt19937_64 rng(808);
  int round_trip = 0, antidiag = 0, lower = 0, lemma = 0, with_zero = 0;
  for (int i = 0; i < 200; ++i) {
    const GtrsSpec s = random_gtrs_spec(rng);
    const Matrix g = build_gtrs_generator(s);
    const auto r = gtrs_recognize(g, s.alpha, s.v);
    round_trip += r && equal(r->twist, twist_matrix(s)) && r->spec.hooks == s.hooks;
    antidiag += gtrs_antidiag_check(g, s.alpha, s.v);
    const AntidiagReport ad = antidiag_product(g, s.alpha, s.v);
    lower += ad.zero_below && ad.antidiag_nonzero;
    lemma += gtrs_lemma_check(g, s.alpha, s.v);
    for (const auto& a : s.alpha) {
      if (a.is_zero()) {
        ++with_zero;
        break;
      }
    }
  }
  std::ostringstream os;
  os << round_trip << "/200 round trips, " << antidiag << "/200 anti-diagonal, " << lower
     << "/200 zero below a nonzero anti-diagonal, " << lemma << "/200 span form; " << with_zero
     << " specs contain alpha = 0";
  report(8, round_trip == 200 && antidiag == 200, "GTRS round trip and anti-diagonal check", os.str());
}

void criterion9() {
  std::mt19937_64 rng(909);
  const Field f7 = Field::make(7);
  int det_ok = 0;
  for (int i = 0; i < 500; ++i) {
    const Index n = uniform(rng, 1, 5);
    PolyMatrix m(n, n);
    for (Index r = 0; r < n; ++r) {
      for (Index c = 0; c < n; ++c) {
        std::vector<Element> co;
        const Index d = uniform(rng, -1, 3);
        for (Index e = 0; e <= d; ++e) co.push_back(f7.random(rng));
        m(r, c) = Poly(std::move(co));
      }
    }
    det_ok += poly_det(m) == laplace_det(m);
  }
  int dual_ok = 0;
  for (int i = 0; i < 100; ++i) {
    const Field f = Field::make(i % 2 ? 11 : 13);
    const Index n = uniform(rng, 2, 11);
    const auto alpha = distinct_points(f, n, rng);
    const auto u = nonzero_vector(f, n, rng);
    const auto w = dual_grs_weight(alpha, u);
    bool ok = true;
    for (Index d = 0; d <= n - 2; ++d) {
      Element s = f.zero();
      for (Index l = 0; l < n; ++l) s += w[l] * u[l] * alpha[l].pow(static_cast<std::uint64_t>(d));
      ok = ok && s.is_zero();
    }
    dual_ok += ok;
  }
  std::ostringstream os;
  os << det_ok << "/500 determinants, " << dual_ok << "/100 dual weights";
  report(9, det_ok == 500 && dual_ok == 100, "oracle equivalence", os.str());
}

void criterion10() {
  std::string detail;
  const bool singular = golden("non-invertible-example", detail);
  const Field f = Field::make(7);
  const MdsResult r = is_mds(LinearCode(f, rows(f, {{"1", "0", "0"}, {"0", "1", "0"}})));
  const bool witness = !r.mds && r.witness && *r.witness == std::vector<Index>{0, 2} &&
                       det(columns_submatrix(rows(f, {{"1", "0", "0"}, {"0", "1", "0"}}),
                                             std::span<const Index>(*r.witness)))
                           .is_zero();
  report(10, singular && witness, "negative controls", detail + (witness ? ", witness {1,3}" : ", bad witness"));
}

}  // namespace

int main() {
  timed_golden(1, "f11-13-prop1", "[7,3] non-GRS MDS code over F_{11^13}", kExample1Seconds);
  timed_golden(2, "f49-first-column", "[7,3] and [8,3] first-column codes over F_49", kExample2Seconds);
  timed_golden(3, "f49-single-e11", "[8,3] single-entry codes over F_49", 0);
  timed_golden(4, "grs-gtrs-example", "GRS code recognized as GTRS over F_7", 0);
  timed_golden(5, "e11-gtrs-family", "single-entry code recognized as GTRS over F_49", 0);
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  std::printf("%d of 10 criteria failed\n", failures);
  return failures;
}
