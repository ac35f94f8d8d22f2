#pragma once

#include <stdexcept>
#include <string>

namespace cyclepair {

enum class ErrorKind {
    NotConnected,
    HasBridge,
    NotCyclic,
    NotCyclicallyOriented,
    NotVertexJoin,
    LengthMismatch,
    BasisMismatch,
    NotALoop,
    KTooLarge,
    RankMismatch,
    NotCyclicOrder,
    NotInduced,
    SingularPairing,
    InvalidGraph,
    Parse,
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::HasBridge: return "HasBridge";
    case ErrorKind::NotCyclic: return "NotCyclic";
    case ErrorKind::NotCyclicallyOriented: return "NotCyclicallyOriented";
    case ErrorKind::NotVertexJoin: return "NotVertexJoin";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::BasisMismatch: return "BasisMismatch";
    case ErrorKind::NotALoop: return "NotALoop";
    case ErrorKind::KTooLarge: return "KTooLarge";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::NotCyclicOrder: return "NotCyclicOrder";
    case ErrorKind::NotInduced: return "NotInduced";
    case ErrorKind::SingularPairing: return "SingularPairing";
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

/// Library failure tagged with the violated precondition.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace cyclepair
