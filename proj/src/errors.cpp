#include "ssp/errors.hpp"

namespace ssp {

const char* error_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::SingularCurve: return "SingularCurve";
        case ErrorKind::BadReduction: return "BadReduction";
        case ErrorKind::InvalidDiscriminant: return "InvalidDiscriminant";
        case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
        case ErrorKind::TorsionPoint: return "TorsionPoint";
        case ErrorKind::NotSupersingular: return "NotSupersingular";
        case ErrorKind::BadLevel: return "BadLevel";
        case ErrorKind::EigenspaceNotCutOut: return "EigenspaceNotCutOut";
        case ErrorKind::NormalizationAmbiguous: return "NormalizationAmbiguous";
        case ErrorKind::PrecisionTooLow: return "PrecisionTooLow";
        case ErrorKind::ZeroDivisor: return "ZeroDivisor";
        case ErrorKind::RecurrenceViolated: return "RecurrenceViolated";
        case ErrorKind::OrderNotCertified: return "OrderNotCertified";
        case ErrorKind::DepthInsufficient: return "DepthInsufficient";
        case ErrorKind::UnsupportedPattern: return "UnsupportedPattern";
        case ErrorKind::NotStabilized: return "NotStabilized";
        case ErrorKind::InsufficientData: return "InsufficientData";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::InvalidConfig: return "InvalidConfig";
    }
    return "Unknown";
}

}  // namespace ssp
