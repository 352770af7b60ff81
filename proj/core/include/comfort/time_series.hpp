#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace comfort {

/// Uniformly sampled real-valued signal. Construction rejects a non-positive
/// sample rate and non-finite samples.
class TimeSeries {
public:
    TimeSeries(std::vector<double> samples, double sample_rate_hz, std::string label = {});

    std::span<const double> samples() const noexcept { return samples_; }
    double sample_rate_hz() const noexcept { return sample_rate_hz_; }
    const std::string& label() const noexcept { return label_; }

    std::size_t size() const noexcept { return samples_.size(); }
    bool empty() const noexcept { return samples_.empty(); }
    double duration_s() const noexcept { return static_cast<double>(samples_.size()) / sample_rate_hz_; }
    double operator[](std::size_t i) const noexcept { return samples_[i]; }

    /// Same samples, different label or rate.
    TimeSeries with_label(std::string label) const;
    TimeSeries with_sample_rate(double sample_rate_hz) const;

    friend bool operator==(const TimeSeries&, const TimeSeries&) = default;

private:
    std::vector<double> samples_;
    double sample_rate_hz_;
    std::string label_;
};

/// Detected peak positions. Indices are strictly increasing, inside
/// [0, source_length), and spaced at least min_distance_samples apart.
struct PeakList {
    std::vector<std::size_t> indices;
    std::size_t source_length = 0;
    double sample_rate_hz = 1.0;
    double min_distance_samples = 0.0;

    std::size_t size() const noexcept { return indices.size(); }
    bool empty() const noexcept { return indices.empty(); }

    /// Checks the ordering, bounds and spacing invariants.
    bool valid() const noexcept;
};

}  // namespace comfort
