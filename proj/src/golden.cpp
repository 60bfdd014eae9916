#include "mdsforge/golden.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "mdsforge/gtrs.hpp"
#include "mdsforge/perturbed.hpp"

namespace mdsforge {

bool GoldenOutcome::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const GoldenCheck& c) { return c.pass; });
}

namespace {

using Rows = std::vector<std::vector<std::string>>;

Matrix parse_rows(const Field& f, const Rows& rows) {
  Matrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.front().size()));
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      m(i, j) = f.parse_element(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
  }
  return m;
}

std::vector<Element> ints(const Field& f, std::initializer_list<int> xs) {
  std::vector<Element> out;
  for (int x : xs) out.push_back(f.from_int(x));
  return out;
}

std::vector<EvalPoint> points(const Field& f, std::initializer_list<int> xs, bool with_infinity = false) {
  std::vector<EvalPoint> out;
  for (int x : xs) out.emplace_back(f.from_int(x));
  if (with_infinity) out.push_back(EvalPoint::infinity());
  return out;
}

class Recorder {
 public:
  Recorder(GoldenOutcome& out, const GoldenOptions& opt) : out_(out), tamper_(opt.tamper == out.name) {}

  void check(std::string what, bool pass, std::string detail = {}) {
    out_.checks.push_back({std::move(what), pass, std::move(detail)});
  }

  // Compares a computed matrix with the expected one.  The first comparison
  // of a tampered case sees a corrupted entry.
  void matrix(const std::string& what, Matrix computed, const Matrix& expected) {
    if (tamper_ && computed.size() > 0) {
      computed(0, 0) += Element(1);
      tamper_ = false;
    }
    out_.shown.emplace_back(what, to_string(computed));
    const bool ok = equal(computed, expected);
    check(what, ok, ok ? std::string() : "expected " + to_string(expected));
  }

  void show(std::string label, std::string value) { out_.shown.emplace_back(std::move(label), std::move(value)); }

 private:
  GoldenOutcome& out_;
  bool tamper_;
};

void check_mds_nongrs(Recorder& rec, const std::string& tag, const LinearCode& code, Index minors,
                      std::uint64_t cap) {
  const GrsTestResult t = grs_test(code, cap);
  rec.check(tag + ": MDS over all " + std::to_string(minors) + " minors",
            t.mds.mds && static_cast<Index>(t.mds.subsets_checked) == minors,
            "checked " + std::to_string(t.mds.subsets_checked));
  rec.check(tag + ": NonGRS with square dimension 6",
            t.verdict == GrsVerdict::NonGRS && t.square_dim == Index{6},
            std::string(to_string(t.verdict)) + ", square_dim " +
                (t.square_dim ? std::to_string(*t.square_dim) : std::string("-")));
}

void case_f11_13(GoldenOutcome& out, const GoldenOptions& opt) {
  Recorder rec(out, opt);
  const Field big = Field::make(11, 13);
  const Field f11 = Field::make(11);
  const GrsSpec spec{f11, points(f11, {1, 2, 3, 4, 5, 6, 7}), ints(f11, {1, 1, 1, 1, 1, 1, 1}), 3};
  const PerturbationSpec pert{{{0, 0, 1}, {0, 1, 1}, {0, 4, 1}}, big.generator()};
  const FamilyResult fr = construct_family(FamilyKind::Prop1, spec, pert, {false, std::nullopt, opt.cap});
  rec.show("field", big.spec());
  rec.matrix("generator", fr.code.generator(),
             parse_rows(big, {{"1+t", "1+t", "1", "1", "1+t", "1", "1"},
                              {"1", "2", "3", "4", "5", "6", "7"},
                              {"1", "4", "9", "5", "3", "3", "5"}}));
  rec.check("certificate max degree <= 3 < 13",
            fr.certificate.all_nonzero && fr.certificate.max_degree <= 3 && min_poly_degree(big.generator()) == 13,
            "max_degree " + std::to_string(fr.certificate.max_degree));
  rec.check("v unchanged by the retry loop", fr.v_retries == 0);
  check_mds_nongrs(rec, "[7,3]", fr.code, 35, opt.cap);
  out.summary = "[7,3] over F_11^13, theta in row 1 at columns 1, 2, 5";
}

void case_f49_first_column(GoldenOutcome& out, const GoldenOptions& opt) {
  Recorder rec(out, opt);
  const Field f49 = Field::make(7, 2, {2, 0, 1});
  const Field f7 = Field::make(7);
  const PerturbationSpec pert{{{0, 0, 1}, {1, 0, 1}, {2, 0, 1}}, f49.generator()};

  const GrsSpec s7{f7, points(f7, {2, 3, 4, 5, 6, 1, 0}), ints(f7, {1, 1, 1, 1, 1, 1, 1}), 3};
  const FamilyResult a = construct_family(FamilyKind::FirstColumn, s7, pert, {false, std::nullopt, opt.cap});
  rec.matrix("[7,3] generator", a.code.generator(),
             parse_rows(f49, {{"1+t", "1", "1", "1", "1", "1", "1"},
                              {"2+t", "3", "4", "5", "6", "1", "0"},
                              {"4+t", "2", "2", "4", "1", "1", "0"}}));
  check_mds_nongrs(rec, "[7,3]", a.code, 35, opt.cap);

  const GrsSpec s8{f7, points(f7, {2, 3, 4, 5, 6, 1, 0}, true), ints(f7, {1, 1, 1, 1, 1, 1, 1, 1}), 3};
  const FamilyResult b = construct_family(FamilyKind::FirstColumn, s8, pert, {false, std::nullopt, opt.cap});
  rec.matrix("[8,3] generator", b.code.generator(),
             parse_rows(f49, {{"1+t", "1", "1", "1", "1", "1", "1", "0"},
                              {"2+t", "3", "4", "5", "6", "1", "0", "0"},
                              {"4+t", "2", "2", "4", "1", "1", "0", "1"}}));
  check_mds_nongrs(rec, "[8,3]", b.code, 56, opt.cap);
  out.summary = "F_49, theta added down column 1";
}

void case_f49_single_e11(GoldenOutcome& out, const GoldenOptions& opt) {
  Recorder rec(out, opt);
  const Field f49 = Field::make(7, 2, {2, 0, 1});
  const Field f7 = Field::make(7);
  const GrsSpec spec{f7, points(f7, {1, 2, 3, 4, 5, 6, 0}, true), ints(f7, {1, 1, 1, 1, 1, 1, 1, 1}), 3};

  const FamilyResult a = construct_family(FamilyKind::SingleE11, spec, {{{0, 0, 1}}, f49.generator()},
                                          {false, std::nullopt, opt.cap});
  rec.matrix("theta at (1,1)", a.code.generator(),
             parse_rows(f49, {{"1+t", "1", "1", "1", "1", "1", "1", "0"},
                              {"1", "2", "3", "4", "5", "6", "0", "0"},
                              {"1", "4", "2", "2", "4", "1", "0", "1"}}));
  check_mds_nongrs(rec, "(1,1)", a.code, 56, opt.cap);

  const FamilyResult b = construct_family(FamilyKind::SingleE11, spec, {{{0, 7, 1}}, f49.generator()},
                                          {false, std::nullopt, opt.cap});
  rec.matrix("theta at (1,8)", b.code.generator(),
             parse_rows(f49, {{"1", "1", "1", "1", "1", "1", "1", "t"},
                              {"1", "2", "3", "4", "5", "6", "0", "0"},
                              {"1", "4", "2", "2", "4", "1", "0", "1"}}));
  check_mds_nongrs(rec, "(1,8)", b.code, 56, opt.cap);
  out.summary = "F_49, a single theta against a finite column and against infinity";
}

void case_grs_gtrs(GoldenOutcome& out, const GoldenOptions& opt) {
  Recorder rec(out, opt);
  const Field f7 = Field::make(7);
  const GrsSpec spec{f7, points(f7, {1, 2, 3, 4, 5, 6, 0}), ints(f7, {1, 1, 1, 1, 1, 1, 1}), 3};
  const Matrix g = build_grs_generator(spec);
  rec.matrix("G", g, parse_rows(f7, {{"1", "1", "1", "1", "1", "1", "1"},
                                     {"1", "2", "3", "4", "5", "6", "0"},
                                     {"1", "4", "2", "2", "4", "1", "0"}}));
  const std::vector<Index> last{4, 5, 6};
  rec.matrix("columns 5..7 of G", columns_submatrix<Element>(g, last),
             parse_rows(f7, {{"1", "1", "1"}, {"5", "6", "0"}, {"4", "1", "0"}}));
  const auto alpha = ints(f7, {0, 2, 3, 4, 5, 6, 1});
  const auto v = ints(f7, {1, 1, 1, 1, 1, 1, 1});
  const auto r = gtrs_recognize(g, alpha, v);
  rec.check("recognized", r.has_value());
  if (!r) return;
  rec.matrix("G V^{-1}", r->ab, parse_rows(f7, {{"1", "0", "0", "0", "0", "0", "0"},
                                                 {"1", "2", "1", "1", "1", "1", "0"},
                                                 {"1", "1", "2", "1", "1", "1", "0"}}));
  rec.matrix("A", r->a, parse_rows(f7, {{"1", "0", "0"}, {"1", "2", "1"}, {"1", "1", "2"}}));
  rec.matrix("A^{-1}", r->a_inv, parse_rows(f7, {{"1", "0", "0"}, {"2", "3", "2"}, {"2", "2", "3"}}));
  rec.matrix("A^{-1} G", r->transformed, parse_rows(f7, {{"1", "1", "1", "1", "1", "1", "1"},
                                                         {"0", "2", "1", "4", "4", "1", "2"},
                                                         {"0", "4", "0", "2", "3", "3", "2"}}));
  rec.matrix("M", r->twist, parse_rows(f7, {{"0", "0", "0", "0"}, {"5", "5", "5", "0"}, {"5", "5", "5", "0"}}));
  std::vector<Hook> want;
  for (Index h : {1, 2}) {
    for (Index t : {1, 2, 3}) want.push_back({h, t, f7.from_int(5)});
  }
  rec.check("hooks h=(1,1,1,2,2,2), t=(1,2,3,1,2,3), eta=5", r->spec.hooks == want);
  const GrsTestResult t = grs_test(LinearCode(f7, g), opt.cap);
  rec.check("G tests GRS with square dimension 5",
            t.verdict == GrsVerdict::GRS && t.square_dim == Index{5});
  out.summary = "GRS_{7,3} over F_7 recognized as GTRS with alpha=(0,2,3,4,5,6,1)";
}

void case_e11_family(GoldenOutcome& out, const GoldenOptions& opt) {
  Recorder rec(out, opt);
  const Field f49 = Field::make(7, 2, {2, 0, 1});
  const Field f7 = Field::make(7);
  const GrsSpec spec{f7, points(f7, {1, 2, 3, 4, 5, 6, 0}), ints(f7, {1, 1, 1, 1, 1, 1, 1}), 3};
  const PerturbedCode pc = build_perturbed_code(spec, {{{0, 0, 1}}, f49.generator()}, opt.cap);
  const Matrix& g = pc.code.generator();
  const auto alpha = ints(f7, {1, 2, 3, 4, 5, 6, 0});
  const auto v = ints(f7, {1, 1, 1, 1, 1, 1, 1});
  const E11Recognition e = recognize_e11_family(g, alpha, v);
  rec.matrix("(G + theta E11) V^{-1}", e.recognition.ab,
             parse_rows(f49, {{"1", "6t", "6t", "6t", "6t", "6t", "6t"},
                              {"0", "1", "0", "0", "0", "0", "0"},
                              {"0", "0", "1", "0", "0", "0", "0"}}));
  const Matrix p = parse_rows(f49, {{"1", "t", "t"}, {"0", "1", "0"}, {"0", "0", "1"}});
  rec.matrix("P (G + theta E11) V^{-1}", p * e.recognition.ab,
             parse_rows(f49, {{"1", "0", "0", "6t", "6t", "6t", "6t"},
                              {"0", "1", "0", "0", "0", "0", "0"},
                              {"0", "0", "1", "0", "0", "0", "0"}}));
  rec.check("transform equals P", equal(e.recognition.a_inv, p));
  std::vector<Hook> want;
  for (Index t = 1; t <= 4; ++t) want.push_back({0, t, f49.parse_element("6t")});
  rec.check("hooks h=(0,0,0,0), t=(1,2,3,4), eta=6 theta", e.spec.hooks == want);
  rec.check("zero alpha after position 1 gives m_0 = 0", e.m0_zero);
  out.summary = "G + theta E11 over F_49 is GTRS with the same alpha, v";
}

void case_twist_example(GoldenOutcome& out, const GoldenOptions& opt) {
  Recorder rec(out, opt);
  const Field f7 = Field::make(7);
  const GtrsSpec spec{f7, ints(f7, {1, 2, 3, 4}), ints(f7, {1, 1, 1, 1}), 2,
                      {{0, 1, f7.from_int(2)}, {0, 2, f7.from_int(3)}, {1, 2, f7.from_int(4)}}};
  rec.matrix("M", twist_matrix(spec), parse_rows(f7, {{"2", "3"}, {"0", "4"}}));
  // f0 = 1 + 2x^2 + 3x^3 and f1 = x + 4x^3 at x = 1, 2, 3, 4.
  rec.matrix("generator", build_gtrs_generator(spec), parse_rows(f7, {{"6", "5", "2", "1"}, {"5", "6", "6", "1"}}));
  out.summary = "k=2, n=4 twist with eta=(2,3,4) over F_7";
}

void case_non_invertible(GoldenOutcome& out, const GoldenOptions& opt) {
  Recorder rec(out, opt);
  const Field f7 = Field::make(7);
  const auto alpha = ints(f7, {1, 2, 3, 4, 5, 6, 0});
  const auto v = ints(f7, {1, 1, 1, 1, 1, 1, 1});
  // Rows 1, alpha, alpha^3: the x^2 row is skipped.
  Matrix g = vandermonde(f7, alpha, 4);
  Matrix rows(3, 7);
  rows << g.row(0), g.row(1), g.row(3);
  const RecognitionAttempt at = gtrs_factor(rows, alpha, v);
  rec.matrix("first block of G V^{-1}", at.a, parse_rows(f7, {{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "0"}}));
  rec.check("not recognized", !at.a_invertible && !gtrs_recognize(rows, alpha, v));
  const LinearCode bad(f7, parse_rows(f7, {{"1", "0", "0"}, {"0", "1", "0"}}));
  const MdsResult m = is_mds(bad, opt.cap);
  rec.check("[[1,0,0],[0,1,0]] is not MDS with witness {1,3}",
            !m.mds && m.witness == std::vector<Index>{0, 2});
  out.summary = "negative controls: singular first block, non-MDS witness";
}

using Runner = std::function<void(GoldenOutcome&, const GoldenOptions&)>;

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> cases{
      {"f11-13-prop1", case_f11_13},
      {"f49-first-column", case_f49_first_column},
      {"f49-single-e11", case_f49_single_e11},
      {"grs-gtrs-example", case_grs_gtrs},
      {"e11-gtrs-family", case_e11_family},
      {"gtrs-twist-example", case_twist_example},
      {"non-invertible-example", case_non_invertible},
  };
  return cases;
}

}  // namespace

std::vector<std::string> golden_case_names() {
  std::vector<std::string> names;
  for (const auto& [name, run] : registry()) names.push_back(name);
  return names;
}

std::vector<GoldenOutcome> run_golden(const std::vector<std::string>& only, const GoldenOptions& options) {
  for (const auto& want : only) {
    const auto& reg = registry();
    if (std::none_of(reg.begin(), reg.end(), [&](const auto& c) { return c.first == want; })) {
      raise(ErrorKind::SpecInvalid, "unknown golden case '" + want + "'");
    }
  }
  std::vector<GoldenOutcome> outcomes;
  for (const auto& [name, run] : registry()) {
    if (!only.empty() && std::find(only.begin(), only.end(), name) == only.end()) continue;
    GoldenOutcome out;
    out.name = name;
    try {
      run(out, options);
    } catch (const Error& e) {
      out.checks.push_back({"ran without error", false, std::string(to_string(e.kind())) + ": " + e.what()});
    }
    outcomes.push_back(std::move(out));
  }
  return outcomes;
}

}  // namespace mdsforge
