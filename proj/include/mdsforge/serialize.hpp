#pragma once

// Canonical JSON for fields, elements, matrices, codes, GTRS specs and
// reports.  Keys are sorted (nlohmann::json's default object map) and
// elements are base-p coefficient arrays, so equal values print identically.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mdsforge/classify.hpp"
#include "mdsforge/code.hpp"
#include "mdsforge/gtrs.hpp"
#include "mdsforge/perturbed.hpp"

namespace mdsforge {

using Json = nlohmann::json;

Json to_json(const Element& e, const Field& f);
/// Accepts a coefficient array, a plain integer, or text such as "1+t".
Element element_from_json(const Json& j, const Field& f);

Json to_json(const EvalPoint& p, const Field& f);
EvalPoint point_from_json(const Json& j, const Field& f);

Json to_json(const Matrix& m, const Field& f);
Matrix matrix_from_json(const Json& j, const Field& f);
/// Reads the "field" key and then the entries.
std::pair<Field, Matrix> matrix_from_json(const Json& j);

Json to_json(const Poly& p, const Field& f);
Json to_json(const PolyMatrix& m, const Field& f);

Json to_json(const LinearCode& c, std::string_view name, const Json& provenance = Json());
struct NamedCode {
  LinearCode code;
  std::string name;
};
NamedCode code_from_json(const Json& j);

Json to_json(const GtrsSpec& s);
GtrsSpec gtrs_spec_from_json(const Json& j);

Json to_json(const Recognition& r);
Json to_json(const ClassificationReport& r);

/// CLI-facing construction request.  Positions are 1-based in JSON.
struct ConstructionSpec {
  std::string kind;  // grs | gtrs | prop1 | first_column | single_e11 | custom
  Field field;       // base field F_q
  std::optional<Field> ext;
  std::vector<EvalPoint> alpha;
  std::vector<Element> v;
  Index k = 3;
  std::vector<Position> positions;
  std::optional<Element> beta;  // in ext
  std::vector<Hook> hooks;      // gtrs only
  bool allow_unverified = false;
};

Json to_json(const ConstructionSpec& s);
ConstructionSpec construction_from_json(const Json& j);

/// Parses text, mapping JSON syntax errors onto ErrorKind::ParseError.
Json parse_json(std::string_view text);
/// Two-space indent plus trailing newline.
std::string dump(const Json& j);

}  // namespace mdsforge
