#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace simplexkit {

enum class ErrorKind {
    DimensionMismatch,
    Degenerate,
    TooFewPoints,
    IndexOutOfRange,
    InvalidDimension,
    InvalidArgument,
    NegativeRadicand,
    NotRegular,
    NotFullDimensional,
    EmptyInput,
    AllDegenerate,
    CapExceeded,
    EvaluationFailure,
    NoSignCriterion,
    NonFinite,
    Parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every recoverable failure in the library is reported through this type;
/// callers dispatch on kind().
class GeometryError : public std::runtime_error {
public:
    GeometryError(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace simplexkit
