#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ssiw {

enum class ErrorKind {
    ContextMismatch,
    NotAUnit,
    PrecisionExhausted,
    ZeroResidue,
    NonzeroConstantTerm,
    NonUnitLinearTerm,
    ZeroToPrecision,
    NotFinite,
    BadUniformizer,
    ConvergenceGuard,
    NotEisenstein,
    CapExceeded,
    NotStabilized,
    InvalidArgument,
    ParseError,
};

std::string_view to_string(ErrorKind kind);

/// All library failures are reported through this type; `kind()` is stable,
/// the message is for humans.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace ssiw
