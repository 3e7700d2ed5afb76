#pragma once

// JSON documents for every result type, and a CSV rendering of them.
// Integers and rationals are written as decimal strings.

#include "powdiag/duality.hpp"
#include "powdiag/sunit_enum.hpp"
#include "powdiag/topology.hpp"
#include "powdiag/weights.hpp"

#include <json.hpp>

#include <string>

namespace powdiag::io {

using Json = nlohmann::ordered_json;

Json to_json(const JointSolution& sol);
Json to_json(const std::vector<JointSolution>& sols);
Json to_json(const PowerSet& set);
Json to_json(const std::set<BigInt>& values);
Json to_json(const WeightTable& table);
Json to_json(const NormBound& bound);
Json to_json(const WeightCheck& check);
Json to_json(const DiscretenessReport& report);
Json to_json(const SaturationReport& report);
Json to_json(const ConvergenceResult& result);
Json to_json(const std::vector<std::pair<BigInt, BigInt>>& pairs);
Json to_json(const AnnihilatorDerivation& derivation);
Json to_json(const X1Witness& witness);

/// Parses one solution record back (bases given by the caller).
JointSolution solution_from_json(const Json& j, Prime p, Prime q);
WeightTable weight_table_from_json(const Json& j);

/// CSV with a header row. Renders `doc[table_key]` when it names an array,
/// otherwise `doc` itself: an array of objects becomes one row per
/// object, an object a single row, scalars a one-column table. Nested
/// values are written as compact JSON.
std::string to_csv(const Json& doc, const std::string& table_key = "");

std::string to_text(const Json& doc);  // two-space indented, trailing newline

}  // namespace powdiag::io
