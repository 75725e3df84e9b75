#pragma once

#include <stdexcept>
#include <string>

namespace ssp {

enum class ErrorKind {
    SingularCurve,
    BadReduction,
    InvalidDiscriminant,
    PrecisionExhausted,
    TorsionPoint,
    NotSupersingular,
    BadLevel,
    EigenspaceNotCutOut,
    NormalizationAmbiguous,
    PrecisionTooLow,
    ZeroDivisor,
    RecurrenceViolated,
    OrderNotCertified,
    DepthInsufficient,
    UnsupportedPattern,
    NotStabilized,
    InsufficientData,
    ParseError,
    InvalidConfig,
};

const char* error_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace ssp
