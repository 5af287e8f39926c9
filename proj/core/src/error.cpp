#include "semidual/error.hpp"

namespace semidual {

const char* to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::DuplicateElement: return "DuplicateElement";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::EmptyPoset: return "EmptyPoset";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotMeetSemilattice: return "NotMeetSemilattice";
    case ErrorCode::EmptyGeneratorsNoTop: return "EmptyGeneratorsNoTop";
    case ErrorCode::EmptyGenerators: return "EmptyGenerators";
    case ErrorCode::NotDistributive: return "NotDistributive";
    case ErrorCode::NotDisjoint: return "NotDisjoint";
    case ErrorCode::NoWitness: return "NoWitness";
    case ErrorCode::KindUnavailable: return "KindUnavailable";
    case ErrorCode::NotSupHom: return "NotSupHom";
    case ErrorCode::NotInjective: return "NotInjective";
    case ErrorCode::NotAValidSpace: return "NotAValidSpace";
    case ErrorCode::NotEsakia: return "NotEsakia";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::NotGPMorphism: return "NotGPMorphism";
    case ErrorCode::CompositionMismatch: return "CompositionMismatch";
    case ErrorCode::NotFunctional: return "NotFunctional";
    case ErrorCode::NoLeastElement: return "NoLeastElement";
    case ErrorCode::NotStrong: return "NotStrong";
    case ErrorCode::NotEsakiaMorphism: return "NotEsakiaMorphism";
    case ErrorCode::NotPartialEsakia: return "NotPartialEsakia";
    case ErrorCode::NotPartialHeyting: return "NotPartialHeyting";
    case ErrorCode::NotDiscrete: return "NotDiscrete";
    case ErrorCode::InternalError: return "InternalError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::UnsupportedKind: return "UnsupportedKind";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    }
    return "UnknownError";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

void fail(ErrorCode code, const std::string& detail) { throw Error(code, detail); }

} // namespace semidual
