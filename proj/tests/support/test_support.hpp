#pragma once

#include <chrono>
#include <cmath>
#include <complex>
#include <cstddef>
#include <filesystem>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "comfort/time_series.hpp"

namespace comfort::testing {

inline std::vector<double> sine_samples(double freq_hz, double fs, std::size_t n, double amp = 1.0,
                                        double phase = 0.0) {
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = amp * std::sin(2.0 * std::numbers::pi * freq_hz * static_cast<double>(i) / fs + phase);
    }
    return x;
}

inline std::vector<double> gaussian_samples(std::size_t n, std::uint64_t seed, double sd = 1.0) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> dist(0.0, sd);
    std::vector<double> x(n);
    for (auto& v : x) v = dist(rng);
    return x;
}

/// Amplitude of the freq_hz component over samples [first, first + count),
/// by direct single-bin DFT.
inline double tone_amplitude(std::span<const double> x, double freq_hz, double fs, std::size_t first,
                             std::size_t count) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = first; i < first + count; ++i) {
        const double w = -2.0 * std::numbers::pi * freq_hz * static_cast<double>(i) / fs;
        acc += x[i] * std::complex<double>(std::cos(w), std::sin(w));
    }
    return 2.0 * std::abs(acc) / static_cast<double>(count);
}

inline double max_abs(std::span<const double> x) {
    double m = 0.0;
    for (double v : x) m = std::max(m, std::abs(v));
    return m;
}

/// Scratch directory removed on destruction.
class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        const auto stamp = std::chrono::steady_clock::now().time_since_epoch().count();
        path_ = std::filesystem::temp_directory_path() / ("comfort_" + tag + "_" + std::to_string(stamp));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;
    const std::filesystem::path& path() const noexcept { return path_; }
    std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

private:
    std::filesystem::path path_;
};

}  // namespace comfort::testing
