#include "comfort/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "comfort/error.hpp"

namespace comfort {
namespace {

double mean_of(std::span<const double> v) {
    double sum = 0.0;
    for (double x : v) sum += x;
    return sum / static_cast<double>(v.size());
}

double centred_sum_of_squares(std::span<const double> v, double mean) {
    double ss = 0.0;
    for (double x : v) ss += (x - mean) * (x - mean);
    return ss;
}

void require_same_length(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw Error(ErrorKind::InvalidParameter, "sequences differ in length (" +
                                                     std::to_string(x.size()) + " vs " +
                                                     std::to_string(y.size()) + ")");
    }
    if (x.size() < 2) throw Error(ErrorKind::InsufficientData, "need at least 2 paired values");
}

// Continued fraction for the incomplete beta function (modified Lentz).
double beta_continued_fraction(double x, double a, double b) {
    constexpr int kMaxIterations = 500;
    constexpr double kEps = 1e-16;
    constexpr double kTiny = 1e-300;

    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIterations; ++m) {
        const double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < kEps) return h;
    }
    return h;
}

}  // namespace

std::string_view code(GarmentCondition c) noexcept {
    switch (c) {
        case GarmentCondition::PLF: return "PLF";
        case GarmentCondition::PTF: return "PTF";
        case GarmentCondition::CLF: return "CLF";
        case GarmentCondition::CTF: return "CTF";
    }
    return "?";
}

std::optional<GarmentCondition> condition_from_code(std::string_view s) noexcept {
    for (auto c : kAllConditions) {
        if (code(c) == s) return c;
    }
    return std::nullopt;
}

Fabric fabric_of(GarmentCondition c) noexcept {
    return c == GarmentCondition::PLF || c == GarmentCondition::PTF ? Fabric::PolyesterBlend
                                                                    : Fabric::CottonBlend;
}

Fit fit_of(GarmentCondition c) noexcept {
    return c == GarmentCondition::PLF || c == GarmentCondition::CLF ? Fit::Loose : Fit::Tight;
}

std::string_view describe(GarmentCondition c) noexcept {
    switch (c) {
        case GarmentCondition::PLF: return "Polyester Loose Fit";
        case GarmentCondition::PTF: return "Polyester Tight Fit";
        case GarmentCondition::CLF: return "Cotton Loose Fit";
        case GarmentCondition::CTF: return "Cotton Tight Fit";
    }
    return "?";
}

std::string_view to_string(Fabric f) noexcept {
    return f == Fabric::CottonBlend ? "CottonBlend" : "PolyesterBlend";
}

std::string_view to_string(Fit f) noexcept { return f == Fit::Tight ? "Tight" : "Loose"; }

std::string_view to_string(Measure m) noexcept {
    return m == Measure::HeartRate ? "hr" : "rr";
}

std::string_view to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::NoSignificantDifference: return "no significant difference";
        case Verdict::SignificantDifference: return "significant difference";
        case Verdict::Undetermined: return "undetermined";
    }
    return "?";
}

StudyTable::StudyTable(Measure measure, std::vector<std::string> subject_ids,
                       std::array<std::vector<double>, 4> columns)
    : measure_(measure), subject_ids_(std::move(subject_ids)), columns_(std::move(columns)) {
    if (subject_ids_.size() < 2) {
        throw Error(ErrorKind::InsufficientData, "study table needs at least 2 subjects");
    }
    for (auto c : kAllConditions) {
        const auto& col = columns_[static_cast<std::size_t>(c)];
        if (col.size() != subject_ids_.size()) {
            throw Error(ErrorKind::InvalidParameter,
                        "column " + std::string(code(c)) + " has " + std::to_string(col.size()) +
                            " values for " + std::to_string(subject_ids_.size()) + " subjects");
        }
        for (double v : col) {
            if (!std::isfinite(v) || v <= 0.0) {
                throw Error(ErrorKind::InvalidParameter,
                            "column " + std::string(code(c)) + " holds a non-positive or non-finite rate");
            }
        }
    }
}

Descriptive descriptive(std::span<const double> column) {
    if (column.size() < 2) {
        throw Error(ErrorKind::InsufficientData, "descriptive statistics need at least 2 values");
    }
    Descriptive d;
    d.mean = mean_of(column);
    d.variance = centred_sum_of_squares(column, d.mean) / static_cast<double>(column.size() - 1);
    d.std_dev = std::sqrt(d.variance);
    return d;
}

double pearson(std::span<const double> x, std::span<const double> y) {
    require_same_length(x, y);
    const double mx = mean_of(x);
    const double my = mean_of(y);
    double sxy = 0.0;
    double sxx = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) {
        throw Error(ErrorKind::DegenerateInput, "correlation undefined for a constant sequence");
    }
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

PairedTestResult paired_t_test(std::span<const double> x, std::span<const double> y) {
    require_same_length(x, y);
    std::vector<double> d(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) d[i] = x[i] - y[i];
    if (std::all_of(d.begin(), d.end(), [&](double v) { return v == d.front(); })) {
        throw Error(ErrorKind::DegenerateInput, "paired differences are all identical");
    }
    const auto n = static_cast<double>(d.size());
    const Descriptive stats = descriptive(d);

    PairedTestResult r;
    r.t_stat = stats.mean / (stats.std_dev / std::sqrt(n));
    r.df = static_cast<int>(d.size()) - 1;
    r.p_one_tail = t_tail_probability(r.t_stat, r.df);
    try {
        r.pearson_r = pearson(x, y);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::DegenerateInput) throw;
    }
    return r;
}

TwoSampleTestResult two_sample_t_test(std::span<const double> x, std::span<const double> y) {
    if (x.size() < 2 || y.size() < 2) {
        throw Error(ErrorKind::InsufficientData, "each sample needs at least 2 values");
    }
    const double mx = mean_of(x);
    const double my = mean_of(y);
    const auto nx = static_cast<double>(x.size());
    const auto ny = static_cast<double>(y.size());
    const double pooled =
        (centred_sum_of_squares(x, mx) + centred_sum_of_squares(y, my)) / (nx + ny - 2.0);
    if (pooled == 0.0) throw Error(ErrorKind::DegenerateInput, "both samples are constant");

    TwoSampleTestResult r;
    r.t_stat = (mx - my) / std::sqrt(pooled * (1.0 / nx + 1.0 / ny));
    r.df = static_cast<int>(x.size() + y.size()) - 2;
    r.p_one_tail = t_tail_probability(r.t_stat, r.df);
    return r;
}

double regularized_incomplete_beta(double x, double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) throw Error(ErrorKind::InvalidParameter, "beta parameters must be positive");
    if (!(x >= 0.0 && x <= 1.0)) throw Error(ErrorKind::InvalidParameter, "x must lie in [0, 1]");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) +
                             b * std::log1p(-x);
    const double front = std::exp(log_front);
    // I_x(a,b) = 1 - I_{1-x}(b,a) above the switch point.
    if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_continued_fraction(x, a, b) / a;
    return 1.0 - front * beta_continued_fraction(1.0 - x, b, a) / b;
}

double t_tail_probability(double t, int df) {
    if (df < 1) throw Error(ErrorKind::InvalidParameter, "degrees of freedom must be >= 1");
    if (std::isnan(t)) throw Error(ErrorKind::InvalidParameter, "t is NaN");
    const double at = std::abs(t);
    if (std::isinf(at)) return 0.0;
    if (df == 1) return std::atan2(1.0, at) / std::numbers::pi;  // Cauchy
    const double nu = df;
    const double denom = nu + at * at;
    const double x = nu / denom;
    if (x < 0.5) return 0.5 * regularized_incomplete_beta(x, nu / 2.0, 0.5);
    return 0.5 * (1.0 - regularized_incomplete_beta(at * at / denom, 0.5, nu / 2.0));
}

double quantile(std::span<const double> values, double p) {
    if (values.empty()) throw Error(ErrorKind::InsufficientData, "quantile of an empty set");
    if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorKind::InvalidParameter, "quantile level must lie in [0, 1]");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const double pos = p * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

BoxSummary box_summary(std::span<const double> column) {
    if (column.empty()) throw Error(ErrorKind::InsufficientData, "box summary of an empty set");
    const auto [lo, hi] = std::minmax_element(column.begin(), column.end());
    return BoxSummary{*lo, quantile(column, 0.25), quantile(column, 0.5), quantile(column, 0.75), *hi};
}

StudyReport analyze_study(const StudyTable& table) {
    StudyReport report{.measure = table.measure(), .subjects = table.subjects(), .descriptives = {}, .boxes = {}, .comparisons = {}};
    for (auto c : kAllConditions) {
        const auto i = static_cast<std::size_t>(c);
        report.descriptives[i] = descriptive(table.column(c));
        report.boxes[i] = box_summary(table.column(c));
    }
    for (std::size_t k = 0; k < kComparisons.size(); ++k) {
        auto& cmp = report.comparisons[k];
        cmp.first = kComparisons[k][0];
        cmp.second = kComparisons[k][1];
        try {
            cmp.test = paired_t_test(table.column(cmp.first), table.column(cmp.second));
            cmp.verdict = cmp.test->p_one_tail < kSignificanceLevel ? Verdict::SignificantDifference
                                                                    : Verdict::NoSignificantDifference;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::DegenerateInput) throw;
            cmp.error = e.what();
            cmp.verdict = Verdict::Undetermined;
        }
    }
    return report;
}

}  // namespace comfort
