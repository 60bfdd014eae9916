#include "mdsforge/serialize.hpp"

#include <string>

namespace mdsforge {

namespace {

[[noreturn]] void bad(const std::string& what) { raise(ErrorKind::ParseError, what); }

const Json& field_at(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

Index index_at(const Json& j, const char* key) {
  const Json& x = field_at(j, key);
  if (!x.is_number_integer()) bad(std::string("\"") + key + "\" must be an integer");
  return x.get<Index>();
}

Field field_from(const Json& j) {
  if (!j.is_string()) bad("field must be a spec string such as \"p=7,b=2,mod=x^2+2\"");
  return Field::parse(j.get<std::string>());
}

template <class T, class F>
std::vector<T> array_of(const Json& j, const char* what, F&& each) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<T> out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(each(x));
  return out;
}

}  // namespace

Json to_json(const Element& e, const Field& f) {
  const Element x = embed(e, f);
  Json arr = Json::array();
  for (auto c : x.coeffs()) arr.push_back(c);
  return arr;
}

Element element_from_json(const Json& j, const Field& f) {
  if (j.is_number_integer()) return f.from_int(j.get<std::int64_t>());
  if (j.is_string()) return f.parse_element(j.get<std::string>());
  if (j.is_array()) {
    if (j.size() > f.degree()) bad("element has more than " + std::to_string(f.degree()) + " coefficients");
    fp::Poly c(f.degree(), 0);
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (!j[i].is_number_integer()) bad("element coefficients must be integers");
      const auto v = j[i].get<std::int64_t>();
      const auto p = static_cast<std::int64_t>(f.characteristic());
      c[i] = static_cast<std::uint64_t>(((v % p) + p) % p);
    }
    return f.element(std::move(c));
  }
  bad("element must be an integer, a string, or a coefficient array");
}

Json to_json(const EvalPoint& p, const Field& f) {
  return p.is_infinity() ? Json("inf") : to_json(p.value(), f);
}

EvalPoint point_from_json(const Json& j, const Field& f) {
  if (j.is_string() && (j.get<std::string>() == "inf" || j.get<std::string>() == "∞")) {
    return EvalPoint::infinity();
  }
  return element_from_json(j, f);
}

Json to_json(const Matrix& m, const Field& f) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j), f));
    rows.push_back(std::move(row));
  }
  return Json{{"field", f.spec()}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

Matrix matrix_from_json(const Json& j, const Field& f) {
  const Index rows = index_at(j, "rows");
  const Index cols = index_at(j, "cols");
  const Json& e = field_at(j, "entries");
  if (rows < 0 || cols < 0) bad("matrix dimensions must be non-negative");
  if (!e.is_array() || static_cast<Index>(e.size()) != rows) bad("entries must have one array per row");
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const Json& row = e[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
      bad("row " + std::to_string(i) + " must have " + std::to_string(cols) + " entries");
    }
    for (Index c = 0; c < cols; ++c) m(i, c) = element_from_json(row[static_cast<std::size_t>(c)], f);
  }
  return m;
}

std::pair<Field, Matrix> matrix_from_json(const Json& j) {
  Field f = field_from(field_at(j, "field"));
  Matrix m = matrix_from_json(j, f);
  return {std::move(f), std::move(m)};
}

Json to_json(const Poly& p, const Field& f) {
  Json arr = Json::array();
  for (const auto& c : p.coefficients()) arr.push_back(to_json(c, f));
  return arr;
}

Json to_json(const PolyMatrix& m, const Field& f) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j), f));
    rows.push_back(std::move(row));
  }
  return Json{{"field", f.spec()}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

Json to_json(const LinearCode& c, std::string_view name, const Json& provenance) {
  Json j = to_json(c.generator(), c.field());
  j["cols"] = c.length();
  j["name"] = std::string(name);
  if (!provenance.is_null()) j["construction"] = provenance;
  return j;
}

NamedCode code_from_json(const Json& j) {
  auto [f, m] = matrix_from_json(j);
  std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "";
  if (m.rows() == 0) return {LinearCode::zero_code(f, m.cols()), name};
  return {LinearCode(f, m), name};
}

Json to_json(const GtrsSpec& s) {
  Json alpha = Json::array(), v = Json::array(), hooks = Json::array();
  for (const auto& a : s.alpha) alpha.push_back(to_json(a, s.field));
  for (const auto& x : s.v) v.push_back(to_json(x, s.field));
  for (const auto& h : s.hooks) hooks.push_back(Json::array({h.h, h.t, to_json(h.eta, s.field)}));
  return Json{{"field", s.field.spec()}, {"alpha", alpha}, {"v", v}, {"k", s.k}, {"hooks", hooks}};
}

GtrsSpec gtrs_spec_from_json(const Json& j) {
  GtrsSpec s;
  s.field = field_from(field_at(j, "field"));
  s.alpha = array_of<Element>(field_at(j, "alpha"), "alpha", [&](const Json& x) { return element_from_json(x, s.field); });
  s.v = array_of<Element>(field_at(j, "v"), "v", [&](const Json& x) { return element_from_json(x, s.field); });
  s.k = index_at(j, "k");
  if (j.contains("hooks")) {
    s.hooks = array_of<Hook>(j["hooks"], "hooks", [&](const Json& x) {
      if (!x.is_array() || x.size() != 3 || !x[0].is_number_integer() || !x[1].is_number_integer()) {
        bad("each hook must be [h, t, eta]");
      }
      return Hook{x[0].get<Index>(), x[1].get<Index>(), element_from_json(x[2], s.field)};
    });
  }
  validate(s);
  return s;
}

Json to_json(const Recognition& r) {
  const Field& f = r.spec.field;
  return Json{{"ab", to_json(r.ab, f)},           {"a", to_json(r.a, f)},
              {"a_inv", to_json(r.a_inv, f)},     {"twist", to_json(r.twist, f)},
              {"spec", to_json(r.spec)},          {"transformed", to_json(r.transformed, f)},
              {"ell", r.spec.hooks.size()}};
}

Json to_json(const ClassificationReport& r) {
  Json j;
  j["mds"] = r.grs.mds.mds;
  j["witness"] = r.grs.mds.witness ? Json(*r.grs.mds.witness) : Json(nullptr);
  j["square_dim"] = r.grs.square_dim ? Json(*r.grs.square_dim) : Json(nullptr);
  j["dual_square_dim"] = r.grs.dual_square_dim ? Json(*r.grs.dual_square_dim) : Json(nullptr);
  j["verdict"] = std::string(to_string(r.grs.verdict));
  j["branch"] = std::string(to_string(r.grs.branch));
  j["gtrs_attempted"] = r.gtrs_attempted;
  j["gtrs"] = r.gtrs ? to_json(*r.gtrs) : Json(nullptr);
  return j;
}

Json to_json(const ConstructionSpec& s) {
  Json j;
  j["kind"] = s.kind;
  j["field"] = s.field.spec();
  j["ext"] = s.ext ? Json(s.ext->spec()) : Json(nullptr);
  Json alpha = Json::array(), v = Json::array(), pos = Json::array(), hooks = Json::array();
  for (const auto& a : s.alpha) alpha.push_back(to_json(a, s.field));
  for (const auto& x : s.v) v.push_back(to_json(x, s.field));
  for (const auto& p : s.positions) pos.push_back(Json::array({p.row + 1, p.col + 1, p.exponent}));
  for (const auto& h : s.hooks) hooks.push_back(Json::array({h.h, h.t, to_json(h.eta, s.field)}));
  j["alpha"] = alpha;
  j["v"] = v;
  j["k"] = s.k;
  j["positions"] = pos;
  j["beta"] = s.beta && s.ext ? to_json(*s.beta, *s.ext) : Json(nullptr);
  j["hooks"] = hooks;
  j["allow_unverified"] = s.allow_unverified;
  return j;
}

ConstructionSpec construction_from_json(const Json& j) {
  ConstructionSpec s;
  const Json& kind = field_at(j, "kind");
  if (!kind.is_string()) bad("kind must be a string");
  s.kind = kind.get<std::string>();
  s.field = field_from(field_at(j, "field"));
  if (j.contains("ext") && !j["ext"].is_null()) s.ext = field_from(j["ext"]);
  s.alpha = array_of<EvalPoint>(field_at(j, "alpha"), "alpha", [&](const Json& x) { return point_from_json(x, s.field); });
  if (j.contains("v") && !j["v"].is_null()) {
    s.v = array_of<Element>(j["v"], "v", [&](const Json& x) { return element_from_json(x, s.field); });
  }
  if (s.v.size() == 1 && s.alpha.size() > 1) s.v.assign(s.alpha.size(), s.v.front());
  if (s.v.empty()) s.v.assign(s.alpha.size(), s.field.one());
  if (j.contains("k")) s.k = index_at(j, "k");
  if (j.contains("positions")) {
    s.positions = array_of<Position>(j["positions"], "positions", [](const Json& x) {
      if (!x.is_array() || x.size() < 2 || x.size() > 3) bad("each position must be [i, j] or [i, j, s]");
      for (const auto& c : x) {
        if (!c.is_number_integer()) bad("position entries must be integers");
      }
      const auto s_ij = x.size() == 3 ? x[2].get<long long>() : 1;
      if (s_ij < 1) bad("exponents must be at least 1");
      return Position{x[0].get<Index>() - 1, x[1].get<Index>() - 1, static_cast<unsigned>(s_ij)};
    });
  }
  if (j.contains("beta") && !j["beta"].is_null()) {
    if (!s.ext) bad("beta needs an \"ext\" field");
    s.beta = element_from_json(j["beta"], *s.ext);
  }
  if (j.contains("hooks")) {
    s.hooks = array_of<Hook>(j["hooks"], "hooks", [&](const Json& x) {
      if (!x.is_array() || x.size() != 3 || !x[0].is_number_integer() || !x[1].is_number_integer()) {
        bad("each hook must be [h, t, eta]");
      }
      return Hook{x[0].get<Index>(), x[1].get<Index>(), element_from_json(x[2], s.field)};
    });
  }
  if (j.contains("allow_unverified")) s.allow_unverified = j["allow_unverified"].get<bool>();
  return s;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace mdsforge
