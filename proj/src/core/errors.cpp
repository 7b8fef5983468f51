// SPDX-License-Identifier: Apache-2.0
#include "statechain/core/errors.hpp"

namespace statechain {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::MissingTag: return "MissingTag";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::DagViolation: return "DagViolation";
        case ErrorCode::InvalidChoice: return "InvalidChoice";
        case ErrorCode::MissingContext: return "MissingContext";
        case ErrorCode::EmptyTrajectory: return "EmptyTrajectory";
        case ErrorCode::NotEnoughCandidates: return "NotEnoughCandidates";
        case ErrorCode::ScriptMiss: return "ScriptMiss";
        case ErrorCode::BackendUnavailable: return "BackendUnavailable";
        case ErrorCode::CompletionRejected: return "CompletionRejected";
        case ErrorCode::Timeout: return "Timeout";
        case ErrorCode::DecompositionFailed: return "DecompositionFailed";
        case ErrorCode::ContractionFailed: return "ContractionFailed";
        case ErrorCode::DuplicateId: return "DuplicateId";
        case ErrorCode::VerifierUnavailable: return "VerifierUnavailable";
        case ErrorCode::IndexError: return "IndexError";
        case ErrorCode::ConfigError: return "ConfigError";
        case ErrorCode::StructuralError: return "StructuralError";
    }
    return "UnknownError";
}

} // namespace statechain
