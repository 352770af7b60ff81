#include "comfort/vitals.hpp"

#include <algorithm>
#include <cstdio>
#include <cmath>
#include <numeric>
#include <string>

#include "comfort/error.hpp"
#include "comfort/signal.hpp"

namespace comfort {
namespace {

// Flat-signal guard, as a fraction of max |input|.
constexpr double kFlatSignalRatio = 1e-9;
// Relative slack on the rate gate bounds.
constexpr double kRateGateSlack = 1e-9;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

}  // namespace

double percentile(std::vector<double> values, double p) {
    if (values.empty()) throw Error(ErrorKind::InsufficientData, "percentile of an empty set");
    if (!(p >= 0.0 && p <= 100.0)) {
        throw Error(ErrorKind::InvalidParameter, "percentile " + fmt(p) + " outside [0, 100]");
    }
    std::sort(values.begin(), values.end());
    const double pos = p / 100.0 * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, values.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return values[lo] + frac * (values[hi] - values[lo]);
}

RateEstimate rate_from_peaks(const PeakList& peaks, double min_interval_s, double max_interval_s) {
    if (!(min_interval_s > 0.0) || !(min_interval_s < max_interval_s)) {
        throw Error(ErrorKind::InvalidParameter, "interval window must satisfy 0 < min < max");
    }
    if (peaks.size() < 3) {
        throw Error(ErrorKind::InsufficientPeaks,
                    "found " + std::to_string(peaks.size()) + " peaks, need at least 3");
    }
    RateEstimate est;
    est.n_peaks = peaks.size();
    for (std::size_t i = 1; i < peaks.indices.size(); ++i) {
        const double interval =
            static_cast<double>(peaks.indices[i] - peaks.indices[i - 1]) / peaks.sample_rate_hz;
        if (interval >= min_interval_s && interval <= max_interval_s) {
            est.intervals_s.push_back(interval);
        } else {
            ++est.rejected_intervals;
        }
    }
    if (est.intervals_s.size() < 2) {
        throw Error(ErrorKind::InsufficientPeaks,
                    "only " + std::to_string(est.intervals_s.size()) +
                        " peak intervals inside the physiological window");
    }
    const double total = std::accumulate(est.intervals_s.begin(), est.intervals_s.end(), 0.0);
    est.rate_per_min = 60.0 / (total / static_cast<double>(est.intervals_s.size()));
    return est;
}

PeakPipeline ecg_pipeline() {
    return PeakPipeline{
        .min_duration_s = 5.0,
        .min_sample_rate_hz = 100.0,
        .detrend_window_s = 0.6,
        .cutoff_hz = 25.0,
        .smoothing_len = 5,
        .min_distance_s = 0.25,
        .amplitude_percentile = 99.0,
        .prominence_fraction = 0.5,
        .min_interval_s = 0.33,
        .max_interval_s = 2.0,
        .min_rate = 30.0,
        .max_rate = 180.0,
    };
}

PeakPipeline respiration_pipeline() {
    return PeakPipeline{
        .min_duration_s = 30.0,
        .min_sample_rate_hz = 8.0,
        .detrend_window_s = 10.0,
        .cutoff_hz = 1.0,
        .smoothing_len = 1,
        .min_distance_s = 2.0,
        .amplitude_percentile = 90.0,
        .prominence_fraction = 0.3,
        .min_interval_s = 2.0,
        .max_interval_s = 10.0,
        .min_rate = 6.0,
        .max_rate = 30.0,
    };
}

PeakList pipeline_peaks(const TimeSeries& signal, const PeakPipeline& p) {
    if (signal.sample_rate_hz() < p.min_sample_rate_hz) {
        throw Error(ErrorKind::InvalidParameter,
                    "sample rate " + fmt(signal.sample_rate_hz()) + " Hz below the required " +
                        fmt(p.min_sample_rate_hz) + " Hz");
    }
    if (signal.duration_s() < p.min_duration_s) {
        throw Error(ErrorKind::TooShort, "signal lasts " + fmt(signal.duration_s()) + " s, need " +
                                             fmt(p.min_duration_s) + " s");
    }

    const auto detrended = detrend(signal, p.detrend_window_s);
    std::vector<double> magnitude(detrended.size());
    std::transform(detrended.samples().begin(), detrended.samples().end(), magnitude.begin(),
                   [](double v) { return std::abs(v); });
    double input_scale = 0.0;
    for (double v : signal.samples()) input_scale = std::max(input_scale, std::abs(v));
    const double amplitude = percentile(std::move(magnitude), p.amplitude_percentile);
    if (!(amplitude > kFlatSignalRatio * input_scale)) {
        throw Error(ErrorKind::InsufficientPeaks, "signal is flat after detrending");
    }

    auto processed = low_pass(detrended, p.cutoff_hz);
    if (p.smoothing_len > 1) processed = moving_average(processed, p.smoothing_len);
    return find_peaks(processed, p.min_distance_s, p.prominence_fraction * amplitude);
}

RateEstimate estimate_rate(const TimeSeries& signal, const PeakPipeline& p) {
    auto est = rate_from_peaks(pipeline_peaks(signal, p), p.min_interval_s, p.max_interval_s);
    if (est.rate_per_min < p.min_rate * (1.0 - kRateGateSlack) ||
        est.rate_per_min > p.max_rate * (1.0 + kRateGateSlack)) {
        throw Error(ErrorKind::EstimationFailed, "estimated rate " + fmt(est.rate_per_min) +
                                                     " outside [" + fmt(p.min_rate) + ", " +
                                                     fmt(p.max_rate) + "]");
    }
    return est;
}

RateEstimate heart_rate_from_ecg(const TimeSeries& ecg) { return estimate_rate(ecg, ecg_pipeline()); }

RateEstimate respiration_rate(const TimeSeries& resp) {
    return estimate_rate(resp, respiration_pipeline());
}

}  // namespace comfort
