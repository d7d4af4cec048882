#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace operad {

enum class ErrorKind {
    IndexOutOfRange,
    LengthMismatch,
    ColorMismatch,
    SignatureMismatch,
    WitnessUnconstructible,
    PreconditionViolated,
    ExponentialBlowup,
    UnboundGenerator,
    InvalidPermutation,
    OutsideDomain,
    Parse,
    Config,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (the law
/// harness, the CLI) can route it without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace operad
