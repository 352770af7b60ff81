#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace comfort {

/// Pixel rectangle. Must lie inside the frame and cover at least 16 pixels.
struct Roi {
    int x = 0;
    int y = 0;
    int w = 0;
    int h = 0;

    friend bool operator==(const Roi&, const Roi&) = default;
};

/// A sequence of equally sized 8-bit RGB frames. Each frame is stored planar:
/// width*height red bytes, then green, then blue.
class FrameSequence {
public:
    FrameSequence(int width, int height, double fps);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    double fps() const noexcept { return fps_; }
    std::size_t frame_count() const noexcept { return frames_.size(); }
    std::size_t plane_size() const noexcept { return static_cast<std::size_t>(width_) * height_; }
    std::size_t frame_bytes() const noexcept { return 3 * plane_size(); }

    /// Appends one planar frame; throws InvalidParameter on a size mismatch.
    void push_back(std::vector<std::uint8_t> planar_rgb);

    std::span<const std::uint8_t> frame(std::size_t i) const { return frames_.at(i); }
    std::span<const std::uint8_t> red(std::size_t i) const { return frame(i).subspan(0, plane_size()); }
    std::span<const std::uint8_t> green(std::size_t i) const { return frame(i).subspan(plane_size(), plane_size()); }
    std::span<const std::uint8_t> blue(std::size_t i) const { return frame(i).subspan(2 * plane_size(), plane_size()); }

    double duration_s() const noexcept { return static_cast<double>(frames_.size()) / fps_; }

private:
    int width_;
    int height_;
    double fps_;
    std::vector<std::vector<std::uint8_t>> frames_;
};

/// Throws InvalidRoi unless roi fits inside a width x height frame with at
/// least 16 pixels.
void validate_roi(const Roi& roi, int width, int height);

/// Centered rectangle of 40% width by 30% height.
Roi default_roi(int width, int height);

}  // namespace comfort
