#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace comfort {

enum class ErrorKind {
    InvalidParameter,
    TooShort,
    InsufficientPeaks,
    EstimationFailed,
    InsufficientData,
    DegenerateInput,
    InvalidRoi,
    Parse,
    Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Failure raised by the library, tagged with an ErrorKind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace comfort
