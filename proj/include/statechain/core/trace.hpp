// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "statechain/core/types.hpp"

namespace statechain {

// JSON bindings for the trace document. nlohmann keeps object keys sorted,
// so dumps are byte-stable for equal values.
void to_json(nlohmann::json& j, const TokenUsage& u);
void from_json(const nlohmann::json& j, TokenUsage& u);
void to_json(nlohmann::json& j, const Question& q);
void from_json(const nlohmann::json& j, Question& q);
void to_json(nlohmann::json& j, const DagNode& n);
void from_json(const nlohmann::json& j, DagNode& n);
void to_json(nlohmann::json& j, const ReasoningDag& d);
void from_json(const nlohmann::json& j, ReasoningDag& d);
void to_json(nlohmann::json& j, const CandidateSolution& c);
void from_json(const nlohmann::json& j, CandidateSolution& c);
void to_json(nlohmann::json& j, const JudgeVerdict& v);
void from_json(const nlohmann::json& j, JudgeVerdict& v);
void to_json(nlohmann::json& j, const TransitionRecord& r);
void from_json(const nlohmann::json& j, TransitionRecord& r);
void to_json(nlohmann::json& j, const ReasoningChain& c);
void from_json(const nlohmann::json& j, ReasoningChain& c);

/// Serialized trace with a stable 2-space indent and trailing newline.
std::string chain_to_trace(const ReasoningChain& chain);
ReasoningChain chain_from_trace(const std::string& text);

void write_chain_trace(const ReasoningChain& chain, const std::filesystem::path& path);
ReasoningChain read_chain_trace(const std::filesystem::path& path);

/// Writes `text` to `path`, creating parent directories as needed.
void write_text_file(const std::filesystem::path& path, const std::string& text);
std::string read_text_file(const std::filesystem::path& path);

} // namespace statechain
