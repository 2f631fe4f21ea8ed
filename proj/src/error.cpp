#include "revolve/error.hpp"

namespace revolve {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::DomainViolation: return "DomainViolation";
    case ErrorKind::QuadratureFailure: return "QuadratureFailure";
    case ErrorKind::SingularAxis: return "SingularAxis";
    case ErrorKind::AxisSingularity: return "AxisSingularity";
    case ErrorKind::NegativeRadicand: return "NegativeRadicand";
    case ErrorKind::NonIntegrableSingularity: return "NonIntegrableSingularity";
    case ErrorKind::EventLocatorFailure: return "EventLocatorFailure";
    case ErrorKind::StepUnderflow: return "StepUnderflow";
    case ErrorKind::DegeneratePolyline: return "DegeneratePolyline";
    case ErrorKind::DegenerateProfile: return "DegenerateProfile";
    case ErrorKind::NonManifold: return "NonManifold";
    case ErrorKind::ExponentForbidden: return "ExponentForbidden";
    case ErrorKind::NonPositiveMu: return "NonPositiveMu";
    case ErrorKind::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorKind::RootBracketFailure: return "RootBracketFailure";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownIdentifier: return "UnknownIdentifier";
    case ErrorKind::EvaluationError: return "EvaluationError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

bool is_validation_error(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::DomainViolation:
    case ErrorKind::SingularAxis:
    case ErrorKind::NegativeRadicand:
    case ErrorKind::ExponentForbidden:
    case ErrorKind::NonPositiveMu:
    case ErrorKind::ParamOutOfRange:
    case ErrorKind::SyntaxError:
    case ErrorKind::UnknownIdentifier:
    case ErrorKind::EvaluationError:
    case ErrorKind::InvalidArgument:
    case ErrorKind::IoError:
        return true;
    default:
        return false;
    }
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind)
{
}

NegativeRadicandError::NegativeRadicandError(double lo, double hi, const std::string& message)
    : Error(ErrorKind::NegativeRadicand, message), lo_(lo), hi_(hi)
{
}

SyntaxError::SyntaxError(std::size_t offset, const std::string& message)
    : Error(ErrorKind::SyntaxError, message + " (at byte " + std::to_string(offset) + ")"),
      offset_(offset)
{
}

}  // namespace revolve
