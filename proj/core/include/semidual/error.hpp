#pragma once

#include <stdexcept>
#include <string>

namespace semidual {

enum class ErrorCode {
    DuplicateElement,
    UnknownElement,
    CycleDetected,
    EmptyPoset,
    TooLarge,
    InvalidArgument,
    NotMeetSemilattice,
    EmptyGeneratorsNoTop,
    EmptyGenerators,
    NotDistributive,
    NotDisjoint,
    NoWitness,
    KindUnavailable,
    NotSupHom,
    NotInjective,
    NotAValidSpace,
    NotEsakia,
    NotAdmissible,
    NotGPMorphism,
    CompositionMismatch,
    NotFunctional,
    NoLeastElement,
    NotStrong,
    NotEsakiaMorphism,
    NotPartialEsakia,
    NotPartialHeyting,
    NotDiscrete,
    InternalError,
    ParseError,
    SchemaError,
    ValidationError,
    UnsupportedKind,
    SizeLimitExceeded,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail);
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& detail);

// Soundness check: a failure here means a theorem-backed invariant broke.
inline void ensure(bool ok, const char* what) {
    if (!ok) fail(ErrorCode::InternalError, what);
}

} // namespace semidual
