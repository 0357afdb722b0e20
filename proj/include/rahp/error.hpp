#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rahp {

enum class ErrorCode {
    BadInput,
    NotASphere,
    NotSimple,
    Disconnected,
    InconsistentEdgeUse,
    BadParameter,
    BadOperands,
    WrongKind,
    NotVeryGood,
    SizeMismatch,
    UnsupportedIdealGluing,
    BudgetExceeded,
    PrecisionUnattainable,
    DegenerateShape,
    NotIdealKind,
    NoConvergence,
    InconsistentPattern,
    MissingVolumes,
    OutOfRange,
    Unreachable,
    TermBudget,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace rahp
