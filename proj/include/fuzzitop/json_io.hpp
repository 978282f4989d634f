#pragma once

#include <nlohmann/json.hpp>

#include "fuzzitop/point_map.hpp"
#include "fuzzitop/space.hpp"

namespace fuzzitop {

// nlohmann with insertion-ordered keys; all emitters below are
// deterministic so reports and golden files compare byte for byte.
using Json = nlohmann::ordered_json;

// Space files:
//   {"points": ["a","b"], "tau": [{"set": ["a"], "degree": "3/4"}, ...]}
// Omitted subsets default to degree 0; the empty set and X default to 1.
// Degrees are strings, "p/q" or a decimal literal; bare 0 and 1 also parse.
FuzzySpace space_from_json(const Json& j);
Json space_to_json(const FuzzySpace& s);

// Family files use the same table shape under "family"; omitted subsets
// default to 0 (no unit defaults — a family is not a topology).
FuzzyFamily family_from_json(const Json& j);
FuzzyFamily family_table_from_json(const Json& table, const Carrier& c);
Json family_to_json(const FuzzyFamily& f);

// Map files: {"map": {"a": "x", "b": "y"}}.
PointMap map_from_json(const Json& j, const Carrier& dom, const Carrier& cod);

Json validation_to_json(const ValidationReport& r);
Json product_to_json(const ProductStructure& p);

Json parse_json_text(const std::string& text);  // wraps parse errors
Json load_json_file(const std::string& path);   // "-" reads stdin

}  // namespace fuzzitop
