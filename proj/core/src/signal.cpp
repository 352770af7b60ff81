#include "comfort/signal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <string>

#include "comfort/error.hpp"

namespace comfort {
namespace {

// Hamming window main-lobe transition width is ~3.3 * fs / N.
constexpr double kHammingTransition = 3.3;
constexpr double kMaxTransitionFraction = 0.25;

std::size_t reflect_index(std::ptrdiff_t j, std::size_t n) {
    const auto last = static_cast<std::ptrdiff_t>(n) - 1;
    if (j < 0) return static_cast<std::size_t>(-j);
    if (j > last) return static_cast<std::size_t>(2 * last - j);
    return static_cast<std::size_t>(j);
}

}  // namespace

std::vector<double> lowpass_taps(double cutoff_hz, double sample_rate_hz) {
    const double nyquist = sample_rate_hz / 2.0;
    if (!(cutoff_hz > 0.0) || !(cutoff_hz < nyquist)) {
        throw Error(ErrorKind::InvalidParameter,
                    "cutoff " + std::to_string(cutoff_hz) + " Hz outside (0, " +
                        std::to_string(nyquist) + ")");
    }
    const double min_len =
        kHammingTransition * sample_rate_hz / (kMaxTransitionFraction * cutoff_hz);
    auto n = static_cast<std::size_t>(std::ceil(min_len));
    if (n % 2 == 0) ++n;

    const double fc = cutoff_hz / sample_rate_hz;  // cycles per sample
    const double mid = static_cast<double>(n - 1) / 2.0;
    std::vector<double> taps(n);
    for (std::size_t i = 0; i <= n / 2; ++i) {
        const double m = static_cast<double>(i) - mid;
        const double sinc = m == 0.0 ? 2.0 * fc
                                     : std::sin(2.0 * std::numbers::pi * fc * m) / (std::numbers::pi * m);
        const double window =
            0.54 - 0.46 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n - 1));
        taps[i] = sinc * window;
        taps[n - 1 - i] = taps[i];
    }
    const double gain = std::accumulate(taps.begin(), taps.end(), 0.0);
    for (double& t : taps) t /= gain;
    return taps;
}

TimeSeries low_pass(const TimeSeries& signal, double cutoff_hz) {
    const auto taps = lowpass_taps(cutoff_hz, signal.sample_rate_hz());
    const std::size_t n = signal.size();
    if (n < taps.size()) {
        throw Error(ErrorKind::TooShort, "signal has " + std::to_string(n) +
                                             " samples, low-pass filter needs " +
                                             std::to_string(taps.size()));
    }
    const auto half = static_cast<std::ptrdiff_t>(taps.size() / 2);
    const auto x = signal.samples();

    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto centre = static_cast<std::ptrdiff_t>(i);
        double acc = 0.0;
        if (centre >= half && centre + half < static_cast<std::ptrdiff_t>(n)) {
            const double* src = x.data() + (centre - half);
            for (std::size_t k = 0; k < taps.size(); ++k) acc += taps[k] * src[k];
        } else {
            for (std::size_t k = 0; k < taps.size(); ++k) {
                acc += taps[k] * x[reflect_index(centre - half + static_cast<std::ptrdiff_t>(k), n)];
            }
        }
        out[i] = acc;
    }
    return TimeSeries(std::move(out), signal.sample_rate_hz(), signal.label());
}

TimeSeries moving_average(const TimeSeries& signal, std::size_t window_len) {
    const std::size_t n = signal.size();
    if (window_len == 0 || window_len % 2 == 0 || window_len > n) {
        throw Error(ErrorKind::InvalidParameter,
                    "moving-average window " + std::to_string(window_len) +
                        " must be odd and within [1, " + std::to_string(n) + "]");
    }
    const std::size_t half = window_len / 2;
    const auto x = signal.samples();
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t lo = i >= half ? i - half : 0;
        const std::size_t hi = std::min(n, i + half + 1);
        // Mean relative to the centre sample.
        double acc = 0.0;
        for (std::size_t j = lo; j < hi; ++j) acc += x[j] - x[i];
        out[i] = x[i] + acc / static_cast<double>(hi - lo);
    }
    return TimeSeries(std::move(out), signal.sample_rate_hz(), signal.label());
}

std::size_t odd_window_samples(double window_s, double sample_rate_hz) {
    const double w = window_s * sample_rate_hz;
    const double half = std::floor((w - 1.0) / 2.0 + 0.5);
    return half < 0.0 ? 1 : 2 * static_cast<std::size_t>(half) + 1;
}

TimeSeries detrend(const TimeSeries& signal, double baseline_window_s) {
    const double raw = baseline_window_s * signal.sample_rate_hz();
    if (!(raw >= 3.0)) {
        throw Error(ErrorKind::InvalidParameter,
                    "baseline window spans " + std::to_string(raw) + " samples, need at least 3");
    }
    const std::size_t window = odd_window_samples(baseline_window_s, signal.sample_rate_hz());
    if (window > signal.size()) {
        throw Error(ErrorKind::InvalidParameter,
                    "baseline window of " + std::to_string(window) + " samples exceeds signal length " +
                        std::to_string(signal.size()));
    }
    const auto baseline = moving_average(signal, window);
    std::vector<double> out(signal.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = signal[i] - baseline[i];
    return TimeSeries(std::move(out), signal.sample_rate_hz(), signal.label());
}

double peak_prominence(const TimeSeries& signal, std::size_t index) {
    const auto x = signal.samples();
    const double height = x[index];
    const std::size_t n = x.size();

    // Walk outwards until a strictly higher sample (or the edge) bounds the
    // peak's dominance interval; the base on each side is the lowest sample
    // inside it.
    double left_min = height;
    for (std::size_t j = index; j > 0; --j) {
        if (x[j - 1] > height) break;
        left_min = std::min(left_min, x[j - 1]);
    }
    double right_min = height;
    for (std::size_t j = index + 1; j < n; ++j) {
        if (x[j] > height) break;
        right_min = std::min(right_min, x[j]);
    }
    return height - std::max(left_min, right_min);
}

PeakList find_peaks(const TimeSeries& signal, double min_distance_s, double min_prominence) {
    if (!(min_distance_s >= 0.0) || !(min_prominence >= 0.0)) {
        throw Error(ErrorKind::InvalidParameter, "peak distance and prominence must be non-negative");
    }
    const auto x = signal.samples();
    const std::size_t n = x.size();
    PeakList result;
    result.source_length = n;
    result.sample_rate_hz = signal.sample_rate_hz();
    result.min_distance_samples = min_distance_s * signal.sample_rate_hz();
    if (n < 3) return result;

    struct Candidate {
        std::size_t index;
        double prominence;
    };
    std::vector<Candidate> candidates;
    std::size_t i = 1;
    while (i + 1 < n) {
        if (x[i - 1] < x[i]) {
            std::size_t j = i;
            while (j + 1 < n && x[j + 1] == x[i]) ++j;
            if (j + 1 < n && x[j + 1] < x[i]) {
                const double prominence = peak_prominence(signal, i);
                if (prominence >= min_prominence) {
                    candidates.push_back({i, prominence});
                }
            }
            i = j + 1;
        } else {
            ++i;
        }
    }

    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Candidate& a, const Candidate& b) { return a.prominence > b.prominence; });

    std::set<std::size_t> kept;
    for (const auto& c : candidates) {
        auto next = kept.lower_bound(c.index);
        if (next != kept.end() &&
            static_cast<double>(*next - c.index) < result.min_distance_samples) {
            continue;
        }
        if (next != kept.begin() &&
            static_cast<double>(c.index - *std::prev(next)) < result.min_distance_samples) {
            continue;
        }
        kept.insert(c.index);
    }
    result.indices.assign(kept.begin(), kept.end());
    return result;
}

}  // namespace comfort
