#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "radsplit/cid.hpp"
#include "radsplit/decomposition.hpp"
#include "radsplit/newton.hpp"
#include "radsplit/splitting.hpp"

namespace radsplit {

using Json = nlohmann::json;

/// Integers are JSON numbers up to 2^53 - 1 in magnitude and decimal
/// strings beyond, so no consumer ever sees a rounded value.
Json zjson(const Z& x);

/// Accepts a JSON number or a string; strings may use the factored
/// shorthand accepted by parse_integer_expr.
Z zparse(const Json& j);

/// Exact parser for integer literals and products like "3^135*26" or
/// "-2*5^7". No floating point, no overflow.
Z parse_integer_expr(const std::string& text);

Json to_json(const Reducible& r);
Json to_json(const Decomposition& d, std::optional<bool> is_cid);
Json to_json(const CidReport& r);
Json to_json(const std::vector<CidReport>& reports);

struct PolygonReport {
    IntPoly phi;
    NewtonPolygon polygon;
    std::vector<ResidualPoly> residuals;  // one per side
    std::vector<bool> separable;          // parallel to residuals
};

Json to_json(const PolygonReport& pr);

// Parsers for the round-trip guarantee: every emitted document re-reads
// into the domain type it came from.
Decomposition decomposition_from_json(const Json& j);
CidReport cid_report_from_json(const Json& j);
std::vector<CidReport> cid_reports_from_json(const Json& j);
/// The residue characteristic is request context, not part of the document.
PolygonReport polygon_from_json(const Json& j, long p);

}  // namespace radsplit
