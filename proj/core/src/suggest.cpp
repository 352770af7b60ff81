#include "comfort/suggest.hpp"

#include <array>
#include <cmath>
#include <string>

#include "comfort/error.hpp"

namespace comfort {
namespace {

constexpr double kHrMin = 30.0;
constexpr double kHrMax = 180.0;
constexpr double kRrMin = 6.0;
constexpr double kRrMax = 30.0;

constexpr std::array<KnowledgeRow, 14> kKnowledge = {{
    {"Hydrophilic Cotton", HeartRateLevel::Low, "-", "-", "(Liya et al. 2007)"},
    {"Moisture Management Cotton", HeartRateLevel::High, "", "", ""},
    {"100% cotton", HeartRateLevel::Low, "High", "High", ""},
    {"13.7% viscose 86.3% polyester", HeartRateLevel::High, "High", "High", "(Parvari, Aghaei et al. 2015)"},
    {"30.2% cotton, 69.8% polyester", HeartRateLevel::Low, "High", "Low", ""},
    {"13.7% viscose 86.3% polyester", HeartRateLevel::High, "High", "Low", ""},
    {"100% polyester (low moisture regain)", HeartRateLevel::High, "", "", ""},
    {"Wool + cotton (high moisture regain)", HeartRateLevel::Low, "30C", "50%", "(Kwon, Kato et al. 1998)"},
    {"100% cotton (moderate moisture regain)", HeartRateLevel::Low, "", "", ""},
    {"100% cotton", HeartRateLevel::Low, "", "", ""},
    {"65% polyester, 35% cotton", HeartRateLevel::Low, "-", "-", "(Li, Keighley et al. 1988)"},
    {"100% polyester", HeartRateLevel::High, "", "", ""},
    {"Experimental Clothing- Under Armor", HeartRateLevel::Low, "-", "-", "(Wickwire, Bishop et al. 2007)"},
    {"Cotton", HeartRateLevel::High, "", "", ""},
}};

bool exertion(const RuleInput& in) { return in.ctx.activity == Activity::Intense || in.hr_elevated(); }

bool hot_humid(const RuleInput& in) { return in.ctx.temperature_c >= 30.0 && in.ctx.humidity_pct >= 50.0; }

bool mild_rest(const RuleInput& in) {
    return (in.ctx.activity == Activity::Rest || in.ctx.activity == Activity::Moderate) &&
           in.ctx.temperature_c < 30.0;
}

bool always(const RuleInput&) { return true; }

const std::array<Rule, 4>& rule_table() {
    static const std::array<Rule, 4> rules = {{
        {"R1", exertion, Fabric::PolyesterBlend, Fit::Loose,
         "Exertion (intense activity or heart rate >= 20% over baseline): low-moisture-regain "
         "polyester dries faster and gives better moisture management under sweat; knowledge row "
         "'100% polyester (low moisture regain)', heart rate High."},
        {"R2", hot_humid, Fabric::PolyesterBlend, Fit::Loose,
         "Hot and humid (>= 30 C, >= 50% RH), the climate of knowledge row 'Wool + cotton (high "
         "moisture regain)' (30C / 50%): a loose polyester blend dries faster under sweat."},
        {"R3", mild_rest, Fabric::CottonBlend, Fit::Loose,
         "Resting or non-laborious wear below 30 C: natural-fibre, loose-fitted garments are "
         "recommended for breathability; knowledge row 'Hydrophilic Cotton', heart rate Low. "
         "Loose fit was also preferred in the emotional-response survey, although wearers leaned "
         "toward polyester loose fit in the warm lab."},
        {"R4", always, Fabric::CottonBlend, Fit::Loose,
         "Default: natural-fibre, loose-fitted garment for general wear; knowledge row "
         "'100% cotton', heart rate Low."},
    }};
    return rules;
}

}  // namespace

std::string_view to_string(Activity a) noexcept {
    switch (a) {
        case Activity::Rest: return "rest";
        case Activity::Moderate: return "moderate";
        case Activity::Intense: return "intense";
    }
    return "?";
}

std::optional<Activity> activity_from_string(std::string_view s) noexcept {
    for (auto a : {Activity::Rest, Activity::Moderate, Activity::Intense}) {
        if (to_string(a) == s) return a;
    }
    return std::nullopt;
}

void validate(const ComfortContext& ctx) {
    if (!(ctx.humidity_pct >= 0.0 && ctx.humidity_pct <= 100.0)) {
        throw Error(ErrorKind::InvalidParameter, "humidity must lie in [0, 100] %");
    }
    if (!(ctx.temperature_c >= -40.0 && ctx.temperature_c <= 60.0)) {
        throw Error(ErrorKind::InvalidParameter, "temperature must lie in [-40, 60] C");
    }
    if (!(ctx.wear_duration_h >= 0.0) || !std::isfinite(ctx.wear_duration_h)) {
        throw Error(ErrorKind::InvalidParameter, "wear duration must be non-negative");
    }
}

void validate(const ComfortReading& reading) {
    if (reading.hr && !(reading.hr->rate_per_min >= kHrMin && reading.hr->rate_per_min <= kHrMax)) {
        throw Error(ErrorKind::InvalidParameter, "heart rate outside [30, 180] bpm");
    }
    if (reading.rr && !(reading.rr->rate_per_min >= kRrMin && reading.rr->rate_per_min <= kRrMax)) {
        throw Error(ErrorKind::InvalidParameter, "respiration rate outside [6, 30] breaths/min");
    }
    if (reading.hr_baseline && !(*reading.hr_baseline > 0.0 && std::isfinite(*reading.hr_baseline))) {
        throw Error(ErrorKind::InvalidParameter, "baseline heart rate must be positive");
    }
}

std::optional<PositiveItem> positive_item_from_string(std::string_view s) noexcept {
    if (s == "soft") return PositiveItem::Soft;
    if (s == "comfortable") return PositiveItem::Comfortable;
    if (s == "relaxed") return PositiveItem::Relaxed;
    return std::nullopt;
}

std::optional<NegativeItem> negative_item_from_string(std::string_view s) noexcept {
    if (s == "stiff") return NegativeItem::Stiff;
    if (s == "itchy") return NegativeItem::Itchy;
    if (s == "annoyed") return NegativeItem::Annoyed;
    return std::nullopt;
}

double emotion_score(const EmotionResponse& response) {
    return (static_cast<double>(response.positive_items.size()) -
            static_cast<double>(response.negative_items.size())) /
           3.0;
}

std::span<const KnowledgeRow> knowledge_rows() noexcept { return kKnowledge; }

bool RuleInput::hr_elevated() const noexcept {
    if (!reading.hr || !reading.hr_baseline) return false;
    return reading.hr->rate_per_min >= (1.0 + kHrElevationThreshold) * *reading.hr_baseline;
}

std::span<const Rule> default_rules() { return rule_table(); }

Suggestion suggest_garment(const ComfortReading& reading, const ComfortContext& ctx,
                           std::optional<double> emotion, std::span<const Rule> rules) {
    validate(ctx);
    validate(reading);
    if (emotion && !(*emotion >= -1.0 && *emotion <= 1.0)) {
        throw Error(ErrorKind::InvalidParameter, "emotion score must lie in [-1, 1]");
    }
    const RuleInput input{reading, ctx};
    for (const auto& rule : rules) {
        if (!rule.matches(input)) continue;
        Suggestion s{rule.fabric, rule.fit, rule.id, rule.rationale, false};
        if (emotion && *emotion <= kEmotionOverrideScore && s.fit == Fit::Tight) {
            s.fit = Fit::Loose;
            s.emotion_override = true;
            s.rationale += " Fit changed from Tight to Loose: negative emotional response to the garment.";
        }
        return s;
    }
    throw Error(ErrorKind::InvalidParameter, "no rule matched; rule table lacks a default");
}

Suggestion suggest_garment(const ComfortReading& reading, const ComfortContext& ctx,
                           std::optional<double> emotion) {
    return suggest_garment(reading, ctx, emotion, default_rules());
}

}  // namespace comfort
