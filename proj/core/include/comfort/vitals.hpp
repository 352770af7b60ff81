#pragma once

#include <cstddef>
#include <vector>

#include "comfort/time_series.hpp"

namespace comfort {

struct RateEstimate {
    double rate_per_min = 0.0;
    std::vector<double> intervals_s;  // retained peak-to-peak intervals
    std::size_t n_peaks = 0;
    std::size_t rejected_intervals = 0;
};

/// rate = 60 / mean(retained intervals). Intervals outside
/// [min_interval_s, max_interval_s] are rejected. Throws InsufficientPeaks for
/// fewer than 3 peaks or fewer than 2 retained intervals.
RateEstimate rate_from_peaks(const PeakList& peaks, double min_interval_s, double max_interval_s);

/// Parameters of one preprocess -> peak-find -> rate chain.
struct PeakPipeline {
    double min_duration_s;
    double min_sample_rate_hz;
    double detrend_window_s;
    double cutoff_hz;
    std::size_t smoothing_len;  // 1 disables the moving-average stage
    double min_distance_s;
    double amplitude_percentile;  // of |detrended signal|
    double prominence_fraction;
    double min_interval_s;
    double max_interval_s;
    double min_rate;
    double max_rate;
};

PeakPipeline ecg_pipeline();
PeakPipeline respiration_pipeline();

/// Runs the pipeline. Failures: TooShort, InvalidParameter (sample rate),
/// InsufficientPeaks, EstimationFailed (rate outside [min_rate, max_rate]).
RateEstimate estimate_rate(const TimeSeries& signal, const PeakPipeline& pipeline);

/// Peak positions the pipeline would use, without the rate step.
PeakList pipeline_peaks(const TimeSeries& signal, const PeakPipeline& pipeline);

RateEstimate heart_rate_from_ecg(const TimeSeries& ecg);
RateEstimate respiration_rate(const TimeSeries& resp);

/// Linear-interpolation percentile, p in [0, 100].
double percentile(std::vector<double> values, double p);

}  // namespace comfort
