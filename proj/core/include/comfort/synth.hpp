#pragma once

#include <cstdint>

#include "comfort/frames.hpp"
#include "comfort/time_series.hpp"

namespace comfort {

inline constexpr std::uint64_t kDefaultSeed = 20201482;

struct SynthSpec {
    double rate_per_min = 60.0;
    double duration_s = 60.0;
    double sample_rate_hz = 250.0;
    double noise_rms = 0.0;
    double baseline_drift_amp = 0.0;
    std::uint64_t seed = kDefaultSeed;
};

/// Throws InvalidParameter unless every field is in range and the spec yields
/// at least three events.
void validate(const SynthSpec& spec);

/// Periodic P-R-T template with a unit R-wave. R-waves sit at the sample
/// nearest each multiple of the period, starting at t = 0.
TimeSeries synth_ecg(const SynthSpec& spec);

/// Unit sinusoid at rate_per_min / 60 Hz, starting at phase zero.
TimeSeries synth_resp(const SynthSpec& spec);

// Template geometry.
namespace ecg_template {
inline constexpr double r_sigma_s = 0.012;
inline constexpr double p_amp = 0.15;
inline constexpr double p_sigma_s = 0.025;
inline constexpr double p_offset = -0.16;  // fraction of min(period, 1 s)
inline constexpr double t_amp = 0.30;
inline constexpr double t_sigma_s = 0.040;
inline constexpr double t_offset = 0.22;
}  // namespace ecg_template

inline constexpr double kDriftHz = 0.03;

struct FrameSynthOptions {
    std::uint64_t seed = kDefaultSeed;
    double pixel_noise = 1.0;       // per-pixel Gaussian dither, gray levels
    double pulse_amplitude = 1.0;   // gray levels
    double resp_amplitude = 0.6;    // gray levels
    double green_level = 120.0;
    double background_green = 60.0;
    std::uint8_t red_level = 150;
    std::uint8_t blue_level = 100;
};

/// Frames whose centered 60% x 60% "face" region carries
/// G0 + a*sin(2*pi*hr/60*t) + b*sin(2*pi*rr/60*t) in green. Red and blue are
/// constant everywhere and the background green is flat.
FrameSequence synth_frames(double hr_bpm, double rr_per_min, double fps, double duration_s,
                           int width, int height, const FrameSynthOptions& options = {});

/// The modulated region of a synth_frames sequence.
Roi face_region(int width, int height);

}  // namespace comfort
