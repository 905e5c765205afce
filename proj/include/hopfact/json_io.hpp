#pragma once

#include <string>

#include <json.hpp>

#include "hopfact/classify.hpp"

namespace hopfact {

using Json = nlohmann::json;

// Readers throw SchemaError whose message starts with the JSON pointer of the offending field.

// {"conductor": N, "coeffs": ["p/q", ...], "text": "..."}; readers also take an integer,
// a "p/q" string or {"zeta": [n, k]}
Json to_json(const CycNum& z);
CycNum cyc_from_json(const Json& j, const std::string& where = "");

Json to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const Json& j, const std::string& where = "");

Json to_json(const AbGroup& g);
Json to_json(const GrpElt& g);
Json to_json(const Datum& d);

// {"family", "params", "datum"}; named families are rebuilt from params, custom from datum
Json to_json(const HopfPresentation& p);
HopfPresentation presentation_from_json(const Json& j, const std::string& where = "");

// {"presentation", "m", "u": {name: matrix}}
Json to_json(const InnerActionMap& a);
InnerActionMap action_from_json(const Json& j, const std::string& where = "");

Json to_json(const Extracted& e);
Json to_json(const RouteReport& r);
Json to_json(const Certificate& c);

Json to_json(const Grading& g);
Json to_json(const KindReport& k);

Json to_json(const CatalogEntry& e);
Json to_json(const IsoVerdict& v);
Json to_json(const ClassReport& r);

// {"family": "taft_m3" | ..., "params": {...}}; the families are listed in docs/schemas.md
std::vector<CatalogEntry> catalog_from_request(const Json& j, const std::string& where = "");

}  // namespace hopfact
