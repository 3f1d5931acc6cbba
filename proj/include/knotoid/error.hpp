#pragma once

#include <stdexcept>
#include <string>

namespace knotoid {

enum class ErrorCode {
    MalformedToken,
    ChordArity,
    SignMismatch,
    BaseOutOfRange,
    UnknownChord,
    IllegalMove,
    NotInvertible,
    PreconditionFailed,
    NotDescending,
    CeilingExceeded,
    BadInput,
};

inline const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::MalformedToken: return "MalformedToken";
        case ErrorCode::ChordArity: return "ChordArity";
        case ErrorCode::SignMismatch: return "SignMismatch";
        case ErrorCode::BaseOutOfRange: return "BaseOutOfRange";
        case ErrorCode::UnknownChord: return "UnknownChord";
        case ErrorCode::IllegalMove: return "IllegalMove";
        case ErrorCode::NotInvertible: return "NotInvertible";
        case ErrorCode::PreconditionFailed: return "PreconditionFailed";
        case ErrorCode::NotDescending: return "NotDescending";
        case ErrorCode::CeilingExceeded: return "CeilingExceeded";
        case ErrorCode::BadInput: return "BadInput";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace knotoid
