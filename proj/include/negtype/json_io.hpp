#pragma once

#include "negtype/combine.hpp"
#include "negtype/simplex.hpp"
#include "negtype/space.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace negtype {

using Json = nlohmann::json;

/// Parse a scalar: "p/q" and decimal strings are exact, integral numbers
/// are exact, other numbers are taken as floating point.
/// Sets `exact` accordingly (left untouched when already false).
Rational scalar_from_json(const Json& j, bool& exact);

/// Space document, either {"labels": [...], "matrix": [[...]]} or
/// {"graph": {"vertices": [...], "edges": [["u","v",len], ...]}}.
SemiMetricSpace space_from_json(const Json& doc);
Json space_to_json(const SemiMetricSpace& s);

/// Simplex document {"a": [["label", w], ...], "b": [...]} resolved
/// against a space's labels.
WeightedSimplex simplex_from_json(const Json& doc, const SemiMetricSpace& s);
Json simplex_to_json(const WeightedSimplex& d, const SemiMetricSpace& s);

/// Plan document {"p": scalar, "components": [{"name": ..., "space": ...}],
/// "steps": [[left, left_point, right, right_point], ...]}.
GluePlan plan_from_json(const Json& doc);

/// True when the document looks like a glue plan rather than a space.
bool is_plan_document(const Json& doc);

/// Parse text into JSON, rethrowing parse errors as ValidationError with
/// the reported location.
Json parse_json_text(std::string_view text);

/// FNV-1a digest of raw input bytes, for report provenance.
std::string content_digest(std::string_view bytes);

} // namespace negtype
