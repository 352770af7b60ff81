#include "comfort/frames.hpp"

#include <cmath>
#include <string>

#include "comfort/error.hpp"

namespace comfort {

FrameSequence::FrameSequence(int width, int height, double fps)
    : width_(width), height_(height), fps_(fps) {
    if (width <= 0 || height <= 0) {
        throw Error(ErrorKind::InvalidParameter, "frame dimensions must be positive");
    }
    if (!(fps > 0.0) || !std::isfinite(fps)) {
        throw Error(ErrorKind::InvalidParameter, "fps must be positive");
    }
}

void FrameSequence::push_back(std::vector<std::uint8_t> planar_rgb) {
    if (planar_rgb.size() != frame_bytes()) {
        throw Error(ErrorKind::InvalidParameter,
                    "frame has " + std::to_string(planar_rgb.size()) + " bytes, expected " +
                        std::to_string(frame_bytes()));
    }
    frames_.push_back(std::move(planar_rgb));
}

void validate_roi(const Roi& roi, int width, int height) {
    const bool inside = roi.x >= 0 && roi.y >= 0 && roi.w > 0 && roi.h > 0 &&
                        roi.x <= width - roi.w && roi.y <= height - roi.h;
    if (!inside) {
        throw Error(ErrorKind::InvalidRoi,
                    "ROI (" + std::to_string(roi.x) + "," + std::to_string(roi.y) + "," +
                        std::to_string(roi.w) + "," + std::to_string(roi.h) +
                        ") does not fit inside a " + std::to_string(width) + "x" +
                        std::to_string(height) + " frame");
    }
    if (static_cast<long long>(roi.w) * roi.h < 16) {
        throw Error(ErrorKind::InvalidRoi, "ROI covers fewer than 16 pixels");
    }
}

Roi default_roi(int width, int height) {
    const int w = std::max(1, static_cast<int>(std::lround(0.4 * width)));
    const int h = std::max(1, static_cast<int>(std::lround(0.3 * height)));
    return Roi{(width - w) / 2, (height - h) / 2, w, h};
}

}  // namespace comfort
