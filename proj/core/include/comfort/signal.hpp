#pragma once

#include <cstddef>
#include <vector>

#include "comfort/time_series.hpp"

namespace comfort {

/// Hamming-windowed sinc taps, normalised to unit DC gain. The length is the
/// smallest odd count whose transition band (3.3 * fs / N) is at most 25% of
/// the cutoff.
std::vector<double> lowpass_taps(double cutoff_hz, double sample_rate_hz);

/// Zero-phase FIR low-pass with reflection padding at both ends.
/// Throws InvalidParameter for a cutoff outside (0, Nyquist) and TooShort when
/// the signal is shorter than the filter.
TimeSeries low_pass(const TimeSeries& signal, double cutoff_hz);

/// Centered moving average over an odd window. Windows shrink to the
/// available samples at the edges.
TimeSeries moving_average(const TimeSeries& signal, std::size_t window_len);

/// Nearest odd sample count to window_s * fs (halves round up).
std::size_t odd_window_samples(double window_s, double sample_rate_hz);

/// signal minus its moving-average baseline.
TimeSeries detrend(const TimeSeries& signal, double baseline_window_s);

/// Local maxima (plateaus reported at their leftmost sample) whose
/// topographic prominence is at least min_prominence, kept greedily in
/// descending prominence order so that no two survivors are closer than
/// min_distance_s * fs samples.
PeakList find_peaks(const TimeSeries& signal, double min_distance_s, double min_prominence);

/// Topographic prominence of the sample at `index`, which must be a local
/// maximum.
double peak_prominence(const TimeSeries& signal, std::size_t index);

}  // namespace comfort
