#pragma once

// JSON and text formats for every domain type. Parse failures throw
// Error(Errc::Parse) with a "line L, column C" location where one exists.

#include <string>
#include <string_view>

#include <json.hpp>

#include "kgonal/scrollar.hpp"
#include "kgonal/splitting.hpp"
#include "kgonal/tableau.hpp"
#include "kgonal/torus.hpp"
#include "kgonal/verifier.hpp"

namespace kgonal::io {

using Json = nlohmann::json;

// Parses JSON text; syntax errors report line and column.
Json parse_json(std::string_view text);

Json to_json(const SplittingType& mu);
SplittingType splitting_from_json(const Json& j);

Json to_json(const BNParams& p);
BNParams params_from_json(const Json& j);

// {"a":3,"b":2,"g":6,"rows":[[1,2,4],[4,5,6]]}
Json to_json(const Tableau& t);
Tableau tableau_from_json(const Json& j);

// Whitespace-separated rows of positive integers; blank lines and lines
// starting with '#' are skipped. The alphabet is `alphabet` if positive,
// otherwise the largest symbol.
Tableau parse_tableau_grid(std::string_view text, int alphabet = 0);

// JSON if the first non-blank character is '{', the plain grid otherwise.
// A positive `alphabet` overrides the grid default but not a JSON "g".
Tableau parse_tableau(std::string_view text, int alphabet = 0);

std::string grid_str(const Tableau& t);

// {"constraints":{"4":1},"d":4,"g":6,"k":3,"r":1}
Json to_json(const TorusClass& u);
TorusClass torus_from_json(const Json& j);

// {"xi":["1/2","3"],"d":4}
Json to_json(const DivisorCoords& D);
DivisorCoords divisor_from_json(const Json& j);

// {"type":3,"boxes":[[3,2],[3,3],[4,3],[4,4]]}
Json to_json(const AdmissiblePath& path);

Json to_json(const Limits& limits);
Json to_json(const SweepManifest& m);

// JSON {"instances":[{"g":..,"r":..,"d":..,"k":..}],"limits":{...}}, or the
// TOML-style form with a [limits] table and one [[instance]] table per
// instance. Missing limits keep their defaults.
SweepManifest parse_manifest(std::string_view text);

Json to_json(const CheckResult& c);
Json to_json(const InstanceReport& r);
Json to_json(const VerificationReport& r);

// One line per instance with counts and per-check status.
std::string report_table(const VerificationReport& r);

}  // namespace kgonal::io
