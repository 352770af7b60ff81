#include "comfort/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "comfort/error.hpp"

namespace comfort {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double gaussian(double t, double centre, double sigma) {
    const double z = (t - centre) / sigma;
    return std::exp(-0.5 * z * z);
}

std::size_t sample_count(double duration_s, double rate_hz) {
    return static_cast<std::size_t>(std::llround(duration_s * rate_hz));
}

void add_noise_and_drift(std::vector<double>& x, const SynthSpec& spec) {
    if (spec.baseline_drift_amp > 0.0) {
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double t = static_cast<double>(i) / spec.sample_rate_hz;
            x[i] += spec.baseline_drift_amp * std::sin(kTwoPi * kDriftHz * t);
        }
    }
    if (spec.noise_rms > 0.0) {
        std::mt19937_64 rng(spec.seed);
        std::normal_distribution<double> noise(0.0, spec.noise_rms);
        for (double& v : x) v += noise(rng);
    }
}

}  // namespace

void validate(const SynthSpec& spec) {
    auto bad = [](const std::string& what) { throw Error(ErrorKind::InvalidParameter, what); };
    if (!(spec.rate_per_min > 0.0)) bad("rate_per_min must be positive");
    if (!(spec.duration_s > 0.0)) bad("duration_s must be positive");
    if (!(spec.sample_rate_hz > 0.0)) bad("sample_rate_hz must be positive");
    if (!(spec.noise_rms >= 0.0)) bad("noise_rms must be non-negative");
    if (!(spec.baseline_drift_amp >= 0.0)) bad("baseline_drift_amp must be non-negative");
    if (spec.rate_per_min * spec.duration_s / 60.0 < 3.0) {
        bad("spec yields fewer than three events");
    }
}

TimeSeries synth_ecg(const SynthSpec& spec) {
    validate(spec);
    if (spec.sample_rate_hz < 100.0) {
        throw Error(ErrorKind::InvalidParameter, "ECG synthesis needs at least 100 Hz");
    }
    namespace tpl = ecg_template;
    const std::size_t n = sample_count(spec.duration_s, spec.sample_rate_hz);
    const double period = 60.0 / spec.rate_per_min;
    const double scale = std::min(period, 1.0);
    const double fs = spec.sample_rate_hz;

    std::vector<double> x(n, 0.0);
    // Each beat only touches samples within 5 sigma of its waves.
    const double reach = std::max(std::abs(tpl::p_offset), tpl::t_offset) * scale + 5.0 * tpl::t_sigma_s;
    for (long long k = 0;; ++k) {
        const auto r_index = std::llround(static_cast<double>(k) * period * fs);
        if (r_index >= static_cast<long long>(n)) break;
        const double r_time = static_cast<double>(r_index) / fs;
        const auto lo = std::max<long long>(0, std::llround((r_time - reach) * fs));
        const auto hi = std::min<long long>(static_cast<long long>(n) - 1, std::llround((r_time + reach) * fs));
        for (long long i = lo; i <= hi; ++i) {
            const double t = static_cast<double>(i) / fs;
            x[static_cast<std::size_t>(i)] +=
                gaussian(t, r_time, tpl::r_sigma_s) +
                tpl::p_amp * gaussian(t, r_time + tpl::p_offset * scale, tpl::p_sigma_s) +
                tpl::t_amp * gaussian(t, r_time + tpl::t_offset * scale, tpl::t_sigma_s);
        }
    }
    add_noise_and_drift(x, spec);
    return TimeSeries(std::move(x), fs, "ecg");
}

TimeSeries synth_resp(const SynthSpec& spec) {
    validate(spec);
    const std::size_t n = sample_count(spec.duration_s, spec.sample_rate_hz);
    const double f = spec.rate_per_min / 60.0;
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = std::sin(kTwoPi * f * static_cast<double>(i) / spec.sample_rate_hz);
    }
    add_noise_and_drift(x, spec);
    return TimeSeries(std::move(x), spec.sample_rate_hz, "resp");
}

Roi face_region(int width, int height) {
    const int w = std::max(1, static_cast<int>(std::lround(0.6 * width)));
    const int h = std::max(1, static_cast<int>(std::lround(0.6 * height)));
    return Roi{(width - w) / 2, (height - h) / 2, w, h};
}

FrameSequence synth_frames(double hr_bpm, double rr_per_min, double fps, double duration_s,
                           int width, int height, const FrameSynthOptions& options) {
    auto bad = [](const std::string& what) { throw Error(ErrorKind::InvalidParameter, what); };
    if (!(fps >= 15.0)) bad("synth_frames needs fps >= 15");
    if (!(duration_s >= 10.0)) bad("synth_frames needs at least 10 s");
    if (!(hr_bpm > 0.0) || !(hr_bpm / 60.0 < fps / 2.0)) bad("heart rate must be positive and below Nyquist");
    if (!(rr_per_min >= 0.0)) bad("respiration rate must be non-negative");
    if (!(options.pixel_noise >= 0.0)) bad("pixel noise must be non-negative");

    FrameSequence frames(width, height, fps);
    const Roi face = face_region(width, height);
    const std::size_t plane = frames.plane_size();
    const std::size_t count = sample_count(duration_s, fps);

    std::mt19937_64 rng(options.seed);
    std::normal_distribution<double> dither(0.0, 1.0);
    auto to_byte = [](double v) {
        return static_cast<std::uint8_t>(std::clamp(std::lround(v), 0L, 255L));
    };

    for (std::size_t f = 0; f < count; ++f) {
        const double t = static_cast<double>(f) / fps;
        const double level = options.green_level +
                             options.pulse_amplitude * std::sin(kTwoPi * hr_bpm / 60.0 * t) +
                             options.resp_amplitude * std::sin(kTwoPi * rr_per_min / 60.0 * t);
        std::vector<std::uint8_t> rgb(3 * plane);
        std::fill_n(rgb.begin(), plane, options.red_level);
        std::fill_n(rgb.begin() + 2 * static_cast<std::ptrdiff_t>(plane), plane, options.blue_level);
        for (int y = 0; y < height; ++y) {
            for (int x = 0; x < width; ++x) {
                const bool in_face = x >= face.x && x < face.x + face.w && y >= face.y && y < face.y + face.h;
                double g = in_face ? level : options.background_green;
                if (options.pixel_noise > 0.0) g += options.pixel_noise * dither(rng);
                rgb[plane + static_cast<std::size_t>(y) * width + x] = to_byte(g);
            }
        }
        frames.push_back(std::move(rgb));
    }
    return frames;
}

}  // namespace comfort
