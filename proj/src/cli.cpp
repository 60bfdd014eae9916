#include "mdsforge/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mdsforge/classify.hpp"
#include "mdsforge/golden.hpp"
#include "mdsforge/gtrs.hpp"
#include "mdsforge/perturbed.hpp"
#include "mdsforge/serialize.hpp"

namespace mdsforge {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ResourceLimit: return kExitResourceLimit;
    case ErrorKind::ParseError: return kExitParseError;
    case ErrorKind::VerificationFailed: return kExitMismatch;
    default: return kExitPrecondition;
  }
}

namespace {

struct Options {
  std::string field;
  std::string ext;
  std::string alpha;
  std::string v;
  Index k = 3;
  std::string beta;
  std::string positions;
  std::string hooks;
  std::string kind = "grs";
  std::uint64_t cap = kDefaultSubsetCap;
  std::uint64_t seed = 0;
  std::uint64_t tries = 1000;
  std::vector<std::string> only;
  std::string output;
  std::string input;
  std::string element;
  std::string tamper;
  bool exhaustive = false;
  bool search = false;
  bool unverified = false;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty() || !parts.empty()) parts.push_back(cur);
  return parts;
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

long long to_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    raise(ErrorKind::ParseError, "bad integer '" + s + "' in " + what);
  }
}

std::vector<EvalPoint> parse_points(const std::string& text, const Field& f) {
  std::vector<EvalPoint> out;
  for (auto part : split(text, ',')) {
    part = trim(part);
    if (part == "inf" || part == "∞") {
      out.push_back(EvalPoint::infinity());
    } else {
      out.emplace_back(f.parse_element(part));
    }
  }
  return out;
}

std::vector<Element> parse_elements(const std::string& text, const Field& f) {
  std::vector<Element> out;
  for (const auto& part : split(text, ',')) out.push_back(f.parse_element(trim(part)));
  return out;
}

std::vector<Element> finite_only(const std::vector<EvalPoint>& pts) {
  std::vector<Element> out;
  for (const auto& p : pts) {
    if (p.is_infinity()) raise(ErrorKind::PreconditionViolated, "GTRS evaluation points must be finite");
    out.push_back(p.value());
  }
  return out;
}

std::vector<Position> parse_positions(const std::string& text) {
  std::vector<Position> out;
  for (const auto& item : split(text, ';')) {
    if (trim(item).empty()) continue;
    const auto f = split(trim(item), ',');
    if (f.size() < 2 || f.size() > 3) raise(ErrorKind::ParseError, "position '" + item + "' must be i,j or i,j,s");
    const long long s = f.size() == 3 ? to_int(trim(f[2]), "positions") : 1;
    if (s < 1) raise(ErrorKind::ParseError, "exponents must be at least 1");
    out.push_back({static_cast<Index>(to_int(trim(f[0]), "positions")) - 1,
                   static_cast<Index>(to_int(trim(f[1]), "positions")) - 1, static_cast<unsigned>(s)});
  }
  return out;
}

std::vector<Hook> parse_hooks(const std::string& text, const Field& f) {
  std::vector<Hook> out;
  for (const auto& item : split(text, ';')) {
    if (trim(item).empty()) continue;
    const auto parts = split(trim(item), ',');
    if (parts.size() != 3) raise(ErrorKind::ParseError, "hook '" + item + "' must be h,t,eta");
    out.push_back({static_cast<Index>(to_int(trim(parts[0]), "hooks")),
                   static_cast<Index>(to_int(trim(parts[1]), "hooks")), f.parse_element(trim(parts[2]))});
  }
  return out;
}

std::string read_input(const std::string& path) {
  if (path.empty()) raise(ErrorKind::ParseError, "--input is required");
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) raise(ErrorKind::ParseError, "cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void emit(const Json& j, const Options& o, std::ostream& out) {
  if (o.output.empty()) {
    out << dump(j);
    return;
  }
  std::ofstream f(o.output);
  if (!f) raise(ErrorKind::PreconditionViolated, "cannot write '" + o.output + "'");
  f << dump(j);
}

bool perturbed_kind(const std::string& kind) {
  return kind == "prop1" || kind == "first_column" || kind == "single_e11" || kind == "custom";
}

ConstructionSpec spec_from_flags(const Options& o) {
  if (o.field.empty()) raise(ErrorKind::ParseError, "--field is required");
  ConstructionSpec s;
  s.kind = o.kind;
  if (perturbed_kind(o.kind)) {
    if (o.ext.empty()) {
      s.ext = Field::parse(o.field);
      s.field = s.ext->prime_subfield();
    } else {
      s.field = Field::parse(o.field);
      s.ext = Field::parse(o.ext);
    }
    s.beta = s.ext->parse_element(o.beta.empty() ? "t" : o.beta);
  } else {
    s.field = Field::parse(o.field);
  }
  if (o.alpha.empty()) raise(ErrorKind::ParseError, "--alpha is required");
  s.alpha = parse_points(o.alpha, s.field);
  s.v = o.v.empty() ? std::vector<Element>{s.field.one()} : parse_elements(o.v, s.field);
  if (s.v.size() == 1) s.v.assign(s.alpha.size(), s.v.front());
  s.k = o.k;
  if (!o.positions.empty()) {
    s.positions = parse_positions(o.positions);
  } else if (o.kind == "single_e11") {
    s.positions = {{0, 0, 1}};
  } else if (o.kind == "first_column") {
    s.positions = {{0, 0, 1}, {1, 0, 1}, {2, 0, 1}};
  }
  if (!o.hooks.empty()) s.hooks = parse_hooks(o.hooks, s.field);
  s.allow_unverified = o.unverified;
  return s;
}

Json certificate_json(const MdsCertificate& c, bool certified, unsigned beta_degree) {
  return Json{{"max_degree", c.max_degree},
              {"all_nonzero", c.all_nonzero},
              {"subsets", c.subsets},
              {"beta_degree", beta_degree},
              {"certified_mds", certified}};
}

Json build_code(const ConstructionSpec& s, std::uint64_t cap) {
  Json prov;
  prov["spec"] = to_json(s);
  if (s.kind == "grs") {
    const GrsSpec g{s.field, s.alpha, s.v, s.k};
    return to_json(LinearCode(s.field, build_grs_generator(g)), "grs", prov);
  }
  if (s.kind == "gtrs") {
    const GtrsSpec g{s.field, finite_only(s.alpha), s.v, s.k, s.hooks};
    prov["gtrs"] = to_json(g);
    return to_json(LinearCode(s.field, build_gtrs_generator(g)), "gtrs", prov);
  }
  if (!perturbed_kind(s.kind)) raise(ErrorKind::ParseError, "unknown kind '" + s.kind + "'");
  if (!s.ext || !s.beta) raise(ErrorKind::ParseError, "perturbed kinds need an extension field and beta");
  const GrsSpec g{s.field, s.alpha, s.v, s.k};
  const PerturbationSpec pert{s.positions, *s.beta};
  if (s.kind == "custom") {
    const PerturbedCode pc = build_perturbed_code(g, pert, cap);
    prov["certificate"] = certificate_json(pc.certificate, pc.certified_mds, pc.beta_degree);
    return to_json(pc.code, "custom", prov);
  }
  const FamilyKind kind = s.kind == "prop1"          ? FamilyKind::Prop1
                          : s.kind == "first_column" ? FamilyKind::FirstColumn
                                                     : FamilyKind::SingleE11;
  const FamilyResult fr = construct_family(kind, g, pert, {s.allow_unverified, std::nullopt, cap});
  prov["certificate"] = certificate_json(fr.certificate, fr.certified_mds,
                                         min_poly_degree(*s.beta, s.field.degree()));
  prov["verdict"] = std::string(to_string(fr.grs.verdict));
  prov["square_dim"] = fr.grs.square_dim ? Json(*fr.grs.square_dim) : Json(nullptr);
  prov["v_retries"] = fr.v_retries;
  prov["row_j"] = fr.row_j ? Json(*fr.row_j + 1) : Json(nullptr);
  prov["unverified_by_theory"] = fr.unverified_by_theory;
  Json v = Json::array();
  for (const auto& x : fr.spec.v) v.push_back(to_json(x, s.field));
  prov["v_used"] = v;
  return to_json(fr.code, s.kind, prov);
}

int cmd_field_info(const Options& o, std::ostream& out) {
  if (o.field.empty()) raise(ErrorKind::ParseError, "--field is required");
  const Field f = Field::parse(o.field);
  Json j;
  j["field"] = f.spec();
  j["p"] = f.characteristic();
  j["b"] = f.degree();
  j["modulus"] = f.is_prime_field() ? Json(nullptr) : Json(format_fp_poly(f.modulus(), "x"));
  const auto q = f.order();
  j["order"] = q ? Json(std::to_string(*q)) : Json(nullptr);
  if (!o.element.empty()) {
    const Element e = f.parse_element(o.element);
    j["element"] = Json{{"coeffs", to_json(e, f)}, {"text", e.to_string()}, {"min_poly_degree", min_poly_degree(e)}};
  }
  emit(j, o, out);
  return kExitOk;
}

int cmd_build(const Options& o, std::ostream& out) {
  const ConstructionSpec s = o.input.empty() ? spec_from_flags(o) : construction_from_json(parse_json(read_input(o.input)));
  emit(build_code(s, o.cap), o, out);
  return kExitOk;
}

std::optional<GtrsCandidate> candidate_from(const Options& o, const Field& f, Index n) {
  if (o.alpha.empty()) return std::nullopt;
  GtrsCandidate c{finite_only(parse_points(o.alpha, f)),
                  o.v.empty() ? std::vector<Element>{f.one()} : parse_elements(o.v, f)};
  if (c.v.size() == 1) c.v.assign(static_cast<std::size_t>(n), c.v.front());
  return c;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const NamedCode nc = code_from_json(parse_json(read_input(o.input)));
  const ClassificationReport rep = classify(nc.code, candidate_from(o, nc.code.field(), nc.code.length()), o.cap);
  Json j = to_json(rep);
  j["name"] = nc.name;
  j["k"] = nc.code.dimension();
  j["n"] = nc.code.length();
  emit(j, o, out);
  return kExitOk;
}

int cmd_recognize(const Options& o, std::ostream& out) {
  const NamedCode nc = code_from_json(parse_json(read_input(o.input)));
  const auto cand = candidate_from(o, nc.code.field(), nc.code.length());
  if (!cand) raise(ErrorKind::ParseError, "--alpha is required");
  const Matrix& g = nc.code.generator();
  const Field& f = nc.code.field();
  Json j;
  j["name"] = nc.name;
  if (o.search || o.exhaustive) {
    const auto hit = gtrs_search(g, cand->alpha, cand->v, {o.seed, o.tries, o.exhaustive});
    j["mode"] = o.exhaustive ? "exhaustive" : "random";
    j["recognized"] = hit.has_value();
    j["recognition"] = hit ? to_json(hit->recognition) : Json(nullptr);
    j["attempts"] = hit ? Json(hit->attempts) : Json(nullptr);
  } else {
    const RecognitionAttempt at = gtrs_factor(g, cand->alpha, cand->v);
    const auto r = gtrs_recognize(g, cand->alpha, cand->v);
    j["mode"] = "fixed";
    j["ab"] = to_json(at.ab, f);
    j["a"] = to_json(at.a, f);
    j["recognized"] = r.has_value();
    j["recognition"] = r ? to_json(*r) : Json(nullptr);
    // The parity-check forms describe the (I | M) V D generator, so test T G.
    const Matrix& checked = r ? r->transformed : g;
    j["checked_on"] = r ? "transformed" : "input";
    const AntidiagReport ad = antidiag_product(checked, cand->alpha, cand->v);
    j["antidiag"] = Json{{"product", to_json(ad.product, f)},
                         {"weights", to_json(ad.weights, f)},
                         {"anti_diagonal", ad.strict()},
                         {"zero_below", ad.zero_below},
                         {"antidiag_nonzero", ad.antidiag_nonzero}};
    j["lemma_check"] = gtrs_lemma_check(checked, cand->alpha, cand->v);
  }
  emit(j, o, out);
  return kExitOk;
}

int cmd_schur(const Options& o, std::ostream& out) {
  const NamedCode nc = code_from_json(parse_json(read_input(o.input)));
  const LinearCode sq = schur_square(nc.code);
  const Index k = nc.code.dimension();
  Json j;
  j["k"] = k;
  j["n"] = nc.code.length();
  j["square_dim"] = sq.dimension();
  j["bound"] = std::min<Index>(nc.code.length(), k * (k + 1) / 2);
  j["square"] = to_json(sq, nc.name.empty() ? "square" : nc.name + "^2");
  emit(j, o, out);
  return kExitOk;
}

int cmd_verify_paper(const Options& o, std::ostream& out) {
  std::vector<std::string> only;
  for (const auto& item : o.only) {
    for (const auto& part : split(item, ',')) {
      if (!trim(part).empty()) only.push_back(trim(part));
    }
  }
  GoldenOptions go;
  go.cap = o.cap;
  if (!o.tamper.empty()) go.tamper = o.tamper;
  const auto outcomes = run_golden(only, go);
  bool all = true;
  for (const auto& oc : outcomes) {
    out << (oc.pass() ? "PASS " : "FAIL ") << oc.name << "  " << oc.summary << "\n";
    for (const auto& [label, value] : oc.shown) out << "    " << label << " = " << value << "\n";
    for (const auto& c : oc.checks) {
      out << "    [" << (c.pass ? "ok" : "MISMATCH") << "] " << c.what;
      if (!c.detail.empty()) out << " (" << c.detail << ")";
      out << "\n";
    }
    all = all && oc.pass();
  }
  out << (all ? "all " : "some ") << "golden cases " << (all ? "passed" : "failed") << " ("
      << outcomes.size() << " run)\n";
  return all ? kExitOk : kExitMismatch;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Perturbed-Vandermonde MDS codes: build, classify, recognize GTRS structure"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--cap", o.cap, "maximum number of column subsets to enumerate")->check(CLI::PositiveNumber);
    sub->add_option("--output,-o", o.output, "write JSON here instead of stdout");
  };

  auto* info = app.add_subcommand("field-info", "describe a finite field");
  info->add_option("--field", o.field, "field spec, e.g. p=7,b=2,mod=x^2+2")->required();
  info->add_option("--element", o.element, "also report this element, e.g. 1+t");
  add_common(info);

  auto* build = app.add_subcommand("build", "construct a generator matrix");
  build->add_option("--kind", o.kind, "grs | gtrs | prop1 | first_column | single_e11 | custom")
      ->check(CLI::IsMember({"grs", "gtrs", "prop1", "first_column", "single_e11", "custom"}));
  build->add_option("--field", o.field, "code field, or the extension for perturbed kinds");
  build->add_option("--ext", o.ext, "extension field; --field is then the base field");
  build->add_option("--alpha", o.alpha, "comma-separated points; 'inf' for infinity");
  build->add_option("--v", o.v, "comma-separated multipliers; one value is broadcast");
  build->add_option("--k", o.k, "dimension");
  build->add_option("--beta", o.beta, "perturbation element in the extension (default t)");
  build->add_option("--positions", o.positions, "1-based i,j[,s] triples separated by ';'");
  build->add_option("--hooks", o.hooks, "GTRS hooks h,t,eta separated by ';'");
  build->add_option("--input,-i", o.input, "construction spec JSON ('-' for stdin)");
  build->add_flag("--unverified", o.unverified, "allow parameters outside the proven regime");
  add_common(build);

  auto* cls = app.add_subcommand("classify", "MDS, Schur-square and GTRS report for a code");
  cls->add_option("--input,-i", o.input, "code JSON ('-' for stdin)")->required();
  cls->add_option("--alpha", o.alpha, "evaluation points for GTRS recognition");
  cls->add_option("--v", o.v, "column multipliers for GTRS recognition");
  cls->add_option("--seed", o.seed, "random seed");
  add_common(cls);

  auto* rec = app.add_subcommand("recognize", "factor G (V D)^{-1} and test for GTRS form");
  rec->add_option("--input,-i", o.input, "code JSON ('-' for stdin)")->required();
  rec->add_option("--alpha", o.alpha, "evaluation points")->required();
  rec->add_option("--v", o.v, "column multipliers (default all 1)");
  rec->add_flag("--search", o.search, "retry over random orderings of alpha");
  rec->add_flag("--exhaustive", o.exhaustive, "retry over every ordering of alpha (n <= 8)");
  rec->add_option("--tries", o.tries, "orderings tried by --search");
  rec->add_option("--seed", o.seed, "random seed for --search");
  add_common(rec);

  auto* schur = app.add_subcommand("schur", "square code of a code");
  schur->add_option("--input,-i", o.input, "code JSON ('-' for stdin)")->required();
  add_common(schur);

  auto* verify = app.add_subcommand("verify-paper", "run the reference examples");
  verify->add_option("--only", o.only, "restrict to these case names (repeatable, comma-separated)");
  verify->add_option("--tamper", o.tamper, "corrupt one entry of the named case (fault injection)")
      ->group("");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitParseError;
  }

  if (const char* env = std::getenv("MDSFORGE_CAP")) {
    try {
      const long long c = to_int(env, "MDSFORGE_CAP");
      if (c <= 0) raise(ErrorKind::ParseError, "MDSFORGE_CAP must be positive");
      o.cap = static_cast<std::uint64_t>(c);
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return kExitParseError;
    }
  }

  try {
    if (info->parsed()) return cmd_field_info(o, out);
    if (build->parsed()) return cmd_build(o, out);
    if (cls->parsed()) return cmd_classify(o, out);
    if (rec->parsed()) return cmd_recognize(o, out);
    if (schur->parsed()) return cmd_schur(o, out);
    if (verify->parsed()) return cmd_verify_paper(o, out);
  } catch (const Error& e) {
    err << "error [" << to_string(e.kind()) << "]: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitParseError;
  }
  return kExitParseError;
}

}  // namespace mdsforge
