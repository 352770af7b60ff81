#include "comfort/ippg.hpp"

#include <cstdint>
#include <string>

#include "comfort/error.hpp"
#include "comfort/signal.hpp"

namespace comfort {

TimeSeries extract_ippg(const FrameSequence& frames, const Roi& roi) {
    validate_roi(roi, frames.width(), frames.height());
    if (frames.frame_count() < 2) {
        throw Error(ErrorKind::TooShort, "need at least 2 frames, got " +
                                             std::to_string(frames.frame_count()));
    }
    const auto pixels = static_cast<double>(roi.w) * roi.h;
    std::vector<double> samples(frames.frame_count());
    for (std::size_t f = 0; f < frames.frame_count(); ++f) {
        const auto green = frames.green(f);
        std::uint64_t sum = 0;
        for (int y = roi.y; y < roi.y + roi.h; ++y) {
            const auto row = green.subspan(static_cast<std::size_t>(y) * frames.width() + roi.x, roi.w);
            for (std::uint8_t v : row) sum += v;
        }
        samples[f] = static_cast<double>(sum) / pixels;
    }
    return TimeSeries(std::move(samples), frames.fps(), "ippg");
}

PeakPipeline ippg_heart_pipeline() {
    return PeakPipeline{
        .min_duration_s = 10.0,
        .min_sample_rate_hz = 15.0,
        .detrend_window_s = 2.0,
        .cutoff_hz = 3.0,
        .smoothing_len = 1,
        .min_distance_s = 0.33,
        .amplitude_percentile = 90.0,
        .prominence_fraction = 0.5,
        .min_interval_s = 60.0 / 180.0,
        .max_interval_s = 60.0 / 42.0,
        .min_rate = 42.0,
        .max_rate = 180.0,
    };
}

RateEstimate hr_from_ippg(const TimeSeries& ippg) { return estimate_rate(ippg, ippg_heart_pipeline()); }

RateEstimate rr_from_ippg(const TimeSeries& ippg) {
    const auto pipeline = respiration_pipeline();
    if (ippg.duration_s() < pipeline.min_duration_s) {
        throw Error(ErrorKind::TooShort, "respiration from iPPG needs at least 30 s");
    }
    const auto baseline = moving_average(ippg, odd_window_samples(2.0, ippg.sample_rate_hz()));
    return estimate_rate(baseline, pipeline);
}

}  // namespace comfort
