#pragma once

#include "comfort/stats.hpp"

namespace comfort {

/// Heart rates (bpm) of the eleven subjects under the four garments.
StudyTable embedded_heart_rate_table();

/// Respiration rates (breaths/min) of the same subjects.
StudyTable embedded_respiration_table();

StudyTable embedded_table(Measure measure);

}  // namespace comfort
