#pragma once

#include "json.hpp"

#include "comfort/frames.hpp"
#include "comfort/stats.hpp"
#include "comfort/suggest.hpp"
#include "comfort/vitals.hpp"

namespace comfort::cli {

nlohmann::json to_json(const RateEstimate& est);
nlohmann::json to_json(const Roi& roi);
nlohmann::json to_json(const Descriptive& d);
nlohmann::json to_json(const BoxSummary& b);
nlohmann::json to_json(const StudyReport& report);
nlohmann::json to_json(const Suggestion& s);

/// Fixed-width text rendering of a study report, laid out like the published
/// tables (conditions across, statistics down).
std::string render_table(const StudyReport& report);

}  // namespace comfort::cli
