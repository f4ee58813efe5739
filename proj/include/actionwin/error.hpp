#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace actionwin {

enum class ErrorCode {
    // coefficients
    DivisionByZero,
    FieldMismatch,
    InvalidField,
    // complex
    NotSquareZero,
    ActionIncrease,
    DegreeMismatch,
    ActionOutsideWindow,
    DuplicateId,
    ForeignGenerator,
    WindowNotNested,
    LevelOutsideWindow,
    InvalidWindow,
    // barcode
    InconsistentTable,
    EngineMismatch,
    // pwc
    SimultaneousBifurcations,
    EventPreconditionViolated,
    ActionWindowViolation,
    NonGenericCrossing,
    // dga
    InvalidChord,
    MixedOutputViolation,
    LengthIncrease,
    SearchBudgetExceeded,
    NotChainMap,
    OrderingViolated,
    WindowTooWide,
    PureChordOfForbiddenLength,
    AugmentationInvalid,
    // displacement
    NonMonotoneTime,
    RatesExceedProfile,
    InvalidProfile,
    // io
    ParseError,
    SchemaError,
    IoError,
};

std::string_view to_string(ErrorCode code);

/// Library-wide exception. `witness()` names the offending object (a
/// generator id, chord label, event index, ...) when there is one.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, std::string witness = {});

    ErrorCode code() const noexcept { return code_; }
    const std::string& witness() const noexcept { return witness_; }
    /// Message without the code prefix.
    const std::string& message() const noexcept { return message_; }

private:
    ErrorCode code_;
    std::string message_;
    std::string witness_;
};

}  // namespace actionwin
