#pragma once

// Serialization of results. Rationals are always written as exact "p/q"
// strings.

#include <string>

#include <json.hpp>

#include "mtasep/exact_dist.hpp"
#include "mtasep/limits.hpp"
#include "mtasep/tasep.hpp"
#include "mtasep/verify.hpp"

namespace mtasep::report {

using Json = nlohmann::ordered_json;

Json toJson(const ExactDist& dist);
/// Columns word,count,numerator,denominator; the word is quoted.
std::string toCsv(const ExactDist& dist);

Json toJson(const tasep::TrajectoryStats& stats);
std::string toCsv(const tasep::TrajectoryStats& stats);

Json toJson(const verify::FormulaReport& report, bool withInstances = true);
std::string toCsv(const verify::FormulaReport& report);
/// Summary line plus one line per failed or skipped gating instance (all instances
/// when verbose).
std::string toTable(const verify::FormulaReport& report, bool verbose = false);

Json toJson(const limits::DirectionVector& v);

}  // namespace mtasep::report
