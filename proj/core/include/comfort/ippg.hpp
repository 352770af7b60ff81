#pragma once

#include "comfort/frames.hpp"
#include "comfort/time_series.hpp"
#include "comfort/vitals.hpp"

namespace comfort {

/// Spatial mean of the green channel over the ROI, one sample per frame.
TimeSeries extract_ippg(const FrameSequence& frames, const Roi& roi);

PeakPipeline ippg_heart_pipeline();

/// Pulse band (2 s detrend, 3 Hz low-pass), 0.33 s peak spacing, 42-180 bpm.
RateEstimate hr_from_ippg(const TimeSeries& ippg);

/// 2 s moving-average baseline fed through the respiration pipeline.
RateEstimate rr_from_ippg(const TimeSeries& ippg);

}  // namespace comfort
