#include "ssiwasawa/error.hpp"

namespace ssiw {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::ZeroResidue: return "ZeroResidue";
    case ErrorKind::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case ErrorKind::NonUnitLinearTerm: return "NonUnitLinearTerm";
    case ErrorKind::ZeroToPrecision: return "ZeroToPrecision";
    case ErrorKind::NotFinite: return "NotFinite";
    case ErrorKind::BadUniformizer: return "BadUniformizer";
    case ErrorKind::ConvergenceGuard: return "ConvergenceGuard";
    case ErrorKind::NotEisenstein: return "NotEisenstein";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotStabilized: return "NotStabilized";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

} // namespace ssiw
