#include "comfort/error.hpp"

namespace comfort {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidParameter: return "invalid-parameter";
        case ErrorKind::TooShort: return "too-short";
        case ErrorKind::InsufficientPeaks: return "insufficient-peaks";
        case ErrorKind::EstimationFailed: return "estimation-failed";
        case ErrorKind::InsufficientData: return "insufficient-data";
        case ErrorKind::DegenerateInput: return "degenerate-input";
        case ErrorKind::InvalidRoi: return "invalid-roi";
        case ErrorKind::Parse: return "parse-error";
        case ErrorKind::Io: return "io-error";
    }
    return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace comfort
