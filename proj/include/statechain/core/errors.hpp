// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace statechain {

enum class ErrorCode {
    // parsing
    MissingTag,
    ParseError,
    DagViolation,
    InvalidChoice,
    MissingContext,
    EmptyTrajectory,
    NotEnoughCandidates,
    // backends
    ScriptMiss,
    BackendUnavailable,
    CompletionRejected,
    Timeout,
    // engine
    DecompositionFailed,
    ContractionFailed,
    // bench / misc
    DuplicateId,
    VerifierUnavailable,
    IndexError,
    ConfigError,
    StructuralError,
};

const char* error_code_name(ErrorCode code);

/// Base exception for all typed failures in this library.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code),
          detail_(std::move(message)) {}

    ErrorCode code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

} // namespace statechain
