#include "actionwin/error.hpp"

namespace actionwin {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::InvalidField: return "InvalidField";
        case ErrorCode::NotSquareZero: return "NotSquareZero";
        case ErrorCode::ActionIncrease: return "ActionIncrease";
        case ErrorCode::DegreeMismatch: return "DegreeMismatch";
        case ErrorCode::ActionOutsideWindow: return "ActionOutsideWindow";
        case ErrorCode::DuplicateId: return "DuplicateId";
        case ErrorCode::ForeignGenerator: return "ForeignGenerator";
        case ErrorCode::WindowNotNested: return "WindowNotNested";
        case ErrorCode::LevelOutsideWindow: return "LevelOutsideWindow";
        case ErrorCode::InvalidWindow: return "InvalidWindow";
        case ErrorCode::InconsistentTable: return "InconsistentTable";
        case ErrorCode::EngineMismatch: return "EngineMismatch";
        case ErrorCode::SimultaneousBifurcations: return "SimultaneousBifurcations";
        case ErrorCode::EventPreconditionViolated: return "EventPreconditionViolated";
        case ErrorCode::ActionWindowViolation: return "ActionWindowViolation";
        case ErrorCode::NonGenericCrossing: return "NonGenericCrossing";
        case ErrorCode::InvalidChord: return "InvalidChord";
        case ErrorCode::MixedOutputViolation: return "MixedOutputViolation";
        case ErrorCode::LengthIncrease: return "LengthIncrease";
        case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
        case ErrorCode::NotChainMap: return "NotChainMap";
        case ErrorCode::OrderingViolated: return "OrderingViolated";
        case ErrorCode::WindowTooWide: return "WindowTooWide";
        case ErrorCode::PureChordOfForbiddenLength: return "PureChordOfForbiddenLength";
        case ErrorCode::AugmentationInvalid: return "AugmentationInvalid";
        case ErrorCode::NonMonotoneTime: return "NonMonotoneTime";
        case ErrorCode::RatesExceedProfile: return "RatesExceedProfile";
        case ErrorCode::InvalidProfile: return "InvalidProfile";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::SchemaError: return "SchemaError";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

namespace {

std::string compose(ErrorCode code, const std::string& message) {
    std::string out(to_string(code));
    out += ": ";
    out += message;
    return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message, std::string witness)
    : std::runtime_error(compose(code, message)), code_(code), message_(message), witness_(std::move(witness)) {}

}  // namespace actionwin
