#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace revolve {

enum class ErrorKind {
    DomainViolation,
    QuadratureFailure,
    SingularAxis,
    AxisSingularity,
    NegativeRadicand,
    NonIntegrableSingularity,
    EventLocatorFailure,
    StepUnderflow,
    DegeneratePolyline,
    DegenerateProfile,
    NonManifold,
    ExponentForbidden,
    NonPositiveMu,
    ParamOutOfRange,
    RootBracketFailure,
    SyntaxError,
    UnknownIdentifier,
    EvaluationError,
    InvalidArgument,
    IoError,
};

std::string_view to_string(ErrorKind kind);

// Validation errors are caused by bad input; everything else is a numerical
// failure. The CLI maps the two groups to different exit codes.
bool is_validation_error(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// NegativeRadicand carries the offending sub-interval of x.
class NegativeRadicandError : public Error {
public:
    NegativeRadicandError(double lo, double hi, const std::string& message);

    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }

private:
    double lo_;
    double hi_;
};

// SyntaxError carries the byte offset into the source text.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t offset, const std::string& message);

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace revolve
