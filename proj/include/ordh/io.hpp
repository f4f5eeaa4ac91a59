#pragma once
//
// JSON formats:
//
//   order:       {"kind":"lex","n":2}  |  {"kind":"functional","alpha":[1,1.414...],"n":2}
//   symbol:      {"n":1,"terms":[{"k":[-1],"re":0.0,"im":1.0}, ...]}   (duplicate k rejected)
//   truncation:  {"form":..., "rows":[...], "cols":[...], "re":[[...]], "im":[[...]], "provenance":...}
//   bmo report:  bounds, verdicts, witnesses as symbol objects, solver summary
//

#include <filesystem>
#include <string>

#include "json.hpp"

#include "ordh/bmo.hpp"
#include "ordh/hankel.hpp"
#include "ordh/ordered_group.hpp"
#include "ordh/trigpoly.hpp"

namespace ordh::io {

using json = nlohmann::json;

json order_to_json(const OrderSpec& order);
OrderSpec order_from_json(const json& j);

json index_to_json(const CharacterIndex& k);

json symbol_to_json(const TrigPoly& f);
TrigPoly symbol_from_json(const json& j);

/// Parses a symbol file; every failure surfaces as ParseError with a diagnostic.
TrigPoly read_symbol_file(const std::filesystem::path& path);
void write_symbol_file(const std::filesystem::path& path, const TrigPoly& f);

json truncation_to_json(const HankelTruncation& t);
json box_to_json(const Box& box);
json decomposition_to_json(const BmoDecomposition& d);
json report_to_json(const BmoReport& report);

/// Parses text as JSON, mapping syntax errors to ParseError.
json parse(const std::string& text, const std::string& what);

} // namespace ordh::io
