#include "cli/report_json.hpp"

#include <cstdio>
#include <sstream>
#include <string>

namespace comfort::cli {

using nlohmann::json;

json to_json(const RateEstimate& est) {
    return json{{"rate_per_min", est.rate_per_min},
                {"n_peaks", est.n_peaks},
                {"rejected_intervals", est.rejected_intervals}};
}

json to_json(const Roi& roi) {
    return json{{"x", roi.x}, {"y", roi.y}, {"w", roi.w}, {"h", roi.h}};
}

json to_json(const Descriptive& d) {
    return json{{"mean", d.mean}, {"std_dev", d.std_dev}, {"variance", d.variance}};
}

json to_json(const BoxSummary& b) {
    return json{{"min", b.min}, {"q1", b.q1}, {"median", b.median}, {"q3", b.q3}, {"max", b.max}};
}

json to_json(const StudyReport& report) {
    json conditions = json::array();
    for (std::size_t i = 0; i < kAllConditions.size(); ++i) {
        const auto c = kAllConditions[i];
        conditions.push_back({{"code", code(c)},
                              {"description", describe(c)},
                              {"fabric", to_string(fabric_of(c))},
                              {"fit", to_string(fit_of(c))},
                              {"descriptive", to_json(report.descriptives[i])},
                              {"box", to_json(report.boxes[i])}});
    }
    json comparisons = json::array();
    for (const auto& cmp : report.comparisons) {
        json j{{"first", code(cmp.first)},
               {"second", code(cmp.second)},
               {"verdict", to_string(cmp.verdict)}};
        if (cmp.test) {
            j["pearson_r"] = cmp.test->pearson_r ? json(*cmp.test->pearson_r) : json(nullptr);
            j["t_stat"] = cmp.test->t_stat;
            j["df"] = cmp.test->df;
            j["p_one_tail"] = cmp.test->p_one_tail;
        } else {
            j["error"] = cmp.error;
        }
        comparisons.push_back(std::move(j));
    }
    return json{{"measure", to_string(report.measure)},
                {"subjects", report.subjects},
                {"alpha", kSignificanceLevel},
                {"conditions", std::move(conditions)},
                {"comparisons", std::move(comparisons)}};
}

json to_json(const Suggestion& s) {
    return json{{"fabric", to_string(s.fabric)},
                {"fit", to_string(s.fit)},
                {"rule_id", s.rule_id},
                {"rationale", s.rationale},
                {"emotion_override", s.emotion_override}};
}

namespace {

std::string cell(double v, int precision) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%12.*f", precision, v);
    return buf;
}

}  // namespace

std::string render_table(const StudyReport& report) {
    std::ostringstream out;
    out << (report.measure == Measure::HeartRate ? "Heart rate" : "Respiration rate")
        << " (n = " << report.subjects << ")\n\n";

    out << "            ";
    for (auto c : kAllConditions) out << "         " << code(c);
    out << '\n';
    const char* names[] = {"Mean", "Std. dev.", "Variance"};
    for (int row = 0; row < 3; ++row) {
        char label[16];
        std::snprintf(label, sizeof label, "%-12s", names[row]);
        out << label;
        for (const auto& d : report.descriptives) {
            const double v = row == 0 ? d.mean : row == 1 ? d.std_dev : d.variance;
            out << cell(v, 2);
        }
        out << '\n';
    }

    out << "\nPaired t-test    Pearson r       t stat   df   P(T<=t) one-tail   verdict\n";
    for (const auto& cmp : report.comparisons) {
        char label[16];
        std::snprintf(label, sizeof label, "%s-%s", code(cmp.first).data(), code(cmp.second).data());
        char line[160];
        if (cmp.test) {
            const auto& t = *cmp.test;
            std::snprintf(line, sizeof line, "%-14s %11s %12.6f %4d %18.6f   ", label,
                          t.pearson_r ? cell(*t.pearson_r, 6).c_str() : "n/a", t.t_stat, t.df,
                          t.p_one_tail);
        } else {
            std::snprintf(line, sizeof line, "%-14s %11s %12s %4s %18s   ", label, "n/a", "n/a", "",
                          "n/a");
        }
        out << line << to_string(cmp.verdict) << '\n';
    }

    out << "\nBox summary       min          q1      median          q3         max\n";
    for (std::size_t i = 0; i < kAllConditions.size(); ++i) {
        const auto& b = report.boxes[i];
        char line[128];
        std::snprintf(line, sizeof line, "%-8s%12.3f%12.3f%12.3f%12.3f%12.3f\n",
                      code(kAllConditions[i]).data(), b.min, b.q1, b.median, b.q3, b.max);
        out << line;
    }
    return out.str();
}

}  // namespace comfort::cli
