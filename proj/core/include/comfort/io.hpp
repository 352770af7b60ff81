#pragma once

#include <filesystem>
#include <iosfwd>

#include "comfort/frames.hpp"
#include "comfort/stats.hpp"
#include "comfort/time_series.hpp"

namespace comfort::io {

// Signal CSV:
//   # sample_rate_hz=<f>      (required)
//   # label=<text>            (optional)
//   t_s,value   or   value    (header)
//   one sample per row
TimeSeries read_signal_csv(std::istream& in);
TimeSeries read_signal_csv(const std::filesystem::path& path);
void write_signal_csv(std::ostream& out, const TimeSeries& series);
void write_signal_csv(const std::filesystem::path& path, const TimeSeries& series);

// Study CSV:
//   # measure=hr|rr
//   subject,PLF,PTF,CLF,CTF
StudyTable read_study_csv(std::istream& in);
StudyTable read_study_csv(const std::filesystem::path& path);
void write_study_csv(std::ostream& out, const StudyTable& table);

// Frame archive: a directory holding a "meta" file (width=, height=, fps=,
// frame_count= lines) and frame_000000.rgb ... raw planar 8-bit RGB frames.
FrameSequence read_frame_archive(const std::filesystem::path& dir);
void write_frame_archive(const std::filesystem::path& dir, const FrameSequence& frames);

std::filesystem::path frame_file_name(std::size_t index);

}  // namespace comfort::io
