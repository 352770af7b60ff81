#include "comfort/time_series.hpp"

#include <cmath>

#include "comfort/error.hpp"

namespace comfort {

TimeSeries::TimeSeries(std::vector<double> samples, double sample_rate_hz, std::string label)
    : samples_(std::move(samples)), sample_rate_hz_(sample_rate_hz), label_(std::move(label)) {
    if (!(sample_rate_hz_ > 0.0) || !std::isfinite(sample_rate_hz_)) {
        throw Error(ErrorKind::InvalidParameter, "sample rate must be positive and finite");
    }
    for (std::size_t i = 0; i < samples_.size(); ++i) {
        if (!std::isfinite(samples_[i])) {
            throw Error(ErrorKind::InvalidParameter,
                        "sample " + std::to_string(i) + " is not finite");
        }
    }
}

TimeSeries TimeSeries::with_label(std::string label) const {
    return TimeSeries(samples_, sample_rate_hz_, std::move(label));
}

TimeSeries TimeSeries::with_sample_rate(double sample_rate_hz) const {
    return TimeSeries(samples_, sample_rate_hz, label_);
}

bool PeakList::valid() const noexcept {
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] >= source_length) return false;
        if (i > 0) {
            if (indices[i] <= indices[i - 1]) return false;
            if (static_cast<double>(indices[i] - indices[i - 1]) < min_distance_samples) return false;
        }
    }
    return true;
}

}  // namespace comfort
