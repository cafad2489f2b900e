#include "simplexkit/errors.hpp"

namespace simplexkit {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::Degenerate: return "Degenerate";
        case ErrorKind::TooFewPoints: return "TooFewPoints";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::InvalidDimension: return "InvalidDimension";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::NegativeRadicand: return "NegativeRadicand";
        case ErrorKind::NotRegular: return "NotRegular";
        case ErrorKind::NotFullDimensional: return "NotFullDimensional";
        case ErrorKind::EmptyInput: return "EmptyInput";
        case ErrorKind::AllDegenerate: return "AllDegenerate";
        case ErrorKind::CapExceeded: return "CapExceeded";
        case ErrorKind::EvaluationFailure: return "EvaluationFailure";
        case ErrorKind::NoSignCriterion: return "NoSignCriterion";
        case ErrorKind::NonFinite: return "NonFinite";
        case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

}  // namespace simplexkit
