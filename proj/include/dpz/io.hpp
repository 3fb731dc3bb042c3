// JSON forms of classes, collections, polygons and quivers.
//
//   NumClass:   {"r": int, "c1": [int...]} with "chi" derived; "chi" is
//               required when r = 0 and checked when present otherwise.
//   Collection: {"surface": id, "objects": [NumClass...], "blocks": [sizes]}
//   Polygon:    {"vertices": [[x, y]...]}; non-integral coordinates are
//               written as "p/q" strings.
//   Quiver:     {"n": int, "arrows": [[int...]...], "multiplicities": [...]}
#pragma once

#include "dpz/polygon.hpp"

#include <json.hpp>

namespace dpz {

using json = nlohmann::json;

// Parsers throw std::invalid_argument with a human-readable reason.
NumClass numclass_from_json(const json& j, const Surface& s);
// Parses and validates (exceptionality, dimensions, block sizes).
Collection collection_from_json(const json& j, bool require_full = true);

json to_json(const NumClass& e);
json to_json(const Collection& c);
json to_json(const Rational& q);
json to_json(const HPPolygon& p);
json to_json(const Quiver& q);
json to_json(const Matrix& m);

}  // namespace dpz
