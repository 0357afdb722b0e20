#include "rahp/error.hpp"

namespace rahp {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::BadInput: return "BadInput";
    case ErrorCode::NotASphere: return "NotASphere";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::InconsistentEdgeUse: return "InconsistentEdgeUse";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::BadOperands: return "BadOperands";
    case ErrorCode::WrongKind: return "WrongKind";
    case ErrorCode::NotVeryGood: return "NotVeryGood";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::UnsupportedIdealGluing: return "UnsupportedIdealGluing";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::PrecisionUnattainable: return "PrecisionUnattainable";
    case ErrorCode::DegenerateShape: return "DegenerateShape";
    case ErrorCode::NotIdealKind: return "NotIdealKind";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::InconsistentPattern: return "InconsistentPattern";
    case ErrorCode::MissingVolumes: return "MissingVolumes";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::Unreachable: return "Unreachable";
    case ErrorCode::TermBudget: return "TermBudget";
    }
    return "Unknown";
}

} // namespace rahp
