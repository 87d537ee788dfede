#pragma once

#include <string>

#include "json.hpp"

#include "lhamil/verify.hpp"

namespace lhamil {

inline constexpr int kReportSchema = 1;

// JSON carries "schema": 1 at the top level. Bound reports use the keys
// scanned, in_scope, max_count, bound, argmax[], violations[].
nlohmann::json to_json(const ExtremalWitness& w);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const StabilityReport& r);
nlohmann::json to_json(const SufficiencyReport& r);

// One "key<TAB>value" line per scalar; list items repeat their key.
std::string to_tsv(const BoundReport& r);
std::string to_tsv(const StabilityReport& r);
std::string to_tsv(const SufficiencyReport& r);

}  // namespace lhamil
