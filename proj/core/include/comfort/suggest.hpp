#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "comfort/stats.hpp"
#include "comfort/vitals.hpp"

namespace comfort {

enum class Activity { Rest, Moderate, Intense };
std::string_view to_string(Activity a) noexcept;
std::optional<Activity> activity_from_string(std::string_view s) noexcept;

struct ComfortContext {
    double temperature_c = 22.0;
    double humidity_pct = 50.0;
    Activity activity = Activity::Rest;
    double wear_duration_h = 0.0;
};

/// Throws InvalidParameter for humidity outside [0, 100], temperature
/// outside [-40, 60] or a negative wear duration.
void validate(const ComfortContext& ctx);

struct ComfortReading {
    std::optional<RateEstimate> hr;
    std::optional<RateEstimate> rr;
    std::optional<double> hr_baseline;  // resting bpm
};

/// HR in [30, 180] bpm, RR in [6, 30] breaths/min, baseline positive.
void validate(const ComfortReading& reading);

enum class PositiveItem { Soft, Comfortable, Relaxed };
enum class NegativeItem { Stiff, Itchy, Annoyed };

struct EmotionResponse {
    std::set<PositiveItem> positive_items;
    std::set<NegativeItem> negative_items;
};

std::optional<PositiveItem> positive_item_from_string(std::string_view s) noexcept;
std::optional<NegativeItem> negative_item_from_string(std::string_view s) noexcept;

/// (|positive| - |negative|) / 3.
double emotion_score(const EmotionResponse& response);

enum class HeartRateLevel { Low, High };

/// One row of the fabric / comfort-parameter literature table, cells verbatim
/// (empty string for an empty cell).
struct KnowledgeRow {
    std::string_view fabric_type;
    HeartRateLevel heart_rate;
    std::string_view temperature;
    std::string_view humidity;
    std::string_view reference;
};

std::span<const KnowledgeRow> knowledge_rows() noexcept;

struct Suggestion {
    Fabric fabric;
    Fit fit;
    std::string rule_id;
    std::string rationale;
    bool emotion_override = false;
};

inline constexpr double kHrElevationThreshold = 0.20;
inline constexpr double kEmotionOverrideScore = -1.0 / 3.0;

/// Facts a rule predicate may look at.
struct RuleInput {
    const ComfortReading& reading;
    const ComfortContext& ctx;

    /// True when both hr and hr_baseline are known and hr >= 1.2 * baseline.
    bool hr_elevated() const noexcept;
};

struct Rule {
    std::string id;
    bool (*matches)(const RuleInput&);
    Fabric fabric;
    Fit fit;
    std::string rationale;
};

/// R1 exertion, R2 hot-humid, R3 rest/moderate below 30 C, R4 default.
std::span<const Rule> default_rules();

/// First matching rule wins. When the emotion score is at or below -1/3 and
/// the rule chose a tight fit, the fit becomes loose and the rationale says
/// so. Throws InvalidParameter when no rule matches or inputs are invalid.
Suggestion suggest_garment(const ComfortReading& reading, const ComfortContext& ctx,
                           std::optional<double> emotion, std::span<const Rule> rules);

Suggestion suggest_garment(const ComfortReading& reading, const ComfortContext& ctx,
                           std::optional<double> emotion = std::nullopt);

}  // namespace comfort
