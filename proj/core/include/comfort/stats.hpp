#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace comfort {

enum class Fabric { CottonBlend, PolyesterBlend };
enum class Fit { Tight, Loose };

/// The four study garments, in the column order of the study tables.
enum class GarmentCondition { PLF, PTF, CLF, CTF };

inline constexpr std::array<GarmentCondition, 4> kAllConditions = {
    GarmentCondition::PLF, GarmentCondition::PTF, GarmentCondition::CLF, GarmentCondition::CTF};

std::string_view code(GarmentCondition c) noexcept;
std::optional<GarmentCondition> condition_from_code(std::string_view code) noexcept;
Fabric fabric_of(GarmentCondition c) noexcept;
Fit fit_of(GarmentCondition c) noexcept;
std::string_view describe(GarmentCondition c) noexcept;
std::string_view to_string(Fabric f) noexcept;
std::string_view to_string(Fit f) noexcept;

enum class Measure { HeartRate, RespirationRate };
std::string_view to_string(Measure m) noexcept;

/// Subjects x conditions matrix of per-minute rates.
class StudyTable {
public:
    StudyTable(Measure measure, std::vector<std::string> subject_ids,
               std::array<std::vector<double>, 4> columns);

    Measure measure() const noexcept { return measure_; }
    const std::vector<std::string>& subject_ids() const noexcept { return subject_ids_; }
    std::span<const double> column(GarmentCondition c) const noexcept {
        return columns_[static_cast<std::size_t>(c)];
    }
    std::size_t subjects() const noexcept { return subject_ids_.size(); }

private:
    Measure measure_;
    std::vector<std::string> subject_ids_;
    std::array<std::vector<double>, 4> columns_;
};

struct Descriptive {
    double mean = 0.0;
    double std_dev = 0.0;
    double variance = 0.0;  // divisor n - 1
};

struct PairedTestResult {
    std::optional<double> pearson_r;  // undefined when either column is constant
    double t_stat = 0.0;
    int df = 0;
    double p_one_tail = 0.0;
};

struct TwoSampleTestResult {
    double t_stat = 0.0;
    int df = 0;
    double p_one_tail = 0.0;
};

struct BoxSummary {
    double min = 0.0;
    double q1 = 0.0;
    double median = 0.0;
    double q3 = 0.0;
    double max = 0.0;
};

Descriptive descriptive(std::span<const double> column);
double pearson(std::span<const double> x, std::span<const double> y);
PairedTestResult paired_t_test(std::span<const double> x, std::span<const double> y);
TwoSampleTestResult two_sample_t_test(std::span<const double> x, std::span<const double> y);

/// P(T >= |t|) under Student's t with df degrees of freedom.
double t_tail_probability(double t, int df);

/// Regularized incomplete beta I_x(a, b).
double regularized_incomplete_beta(double x, double a, double b);

/// Quartiles by linear interpolation at position (n - 1) * p.
double quantile(std::span<const double> values, double p);
BoxSummary box_summary(std::span<const double> column);

inline constexpr double kSignificanceLevel = 0.05;

enum class Verdict { NoSignificantDifference, SignificantDifference, Undetermined };
std::string_view to_string(Verdict v) noexcept;

struct Comparison {
    GarmentCondition first;
    GarmentCondition second;
    std::optional<PairedTestResult> test;
    std::string error;  // set when test is empty
    Verdict verdict = Verdict::Undetermined;
};

/// The four reported comparisons: PLF-PTF, CLF-CTF, PLF-CLF, PTF-CTF.
inline constexpr std::array<std::array<GarmentCondition, 2>, 4> kComparisons = {{
    {GarmentCondition::PLF, GarmentCondition::PTF},
    {GarmentCondition::CLF, GarmentCondition::CTF},
    {GarmentCondition::PLF, GarmentCondition::CLF},
    {GarmentCondition::PTF, GarmentCondition::CTF},
}};

struct StudyReport {
    Measure measure;
    std::size_t subjects = 0;
    std::array<Descriptive, 4> descriptives;
    std::array<BoxSummary, 4> boxes;
    std::array<Comparison, 4> comparisons;
};

StudyReport analyze_study(const StudyTable& table);

}  // namespace comfort
