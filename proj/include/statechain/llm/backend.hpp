// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "statechain/core/types.hpp"

namespace statechain::llm {

/// One single-turn completion request. `tag` buckets the call for accounting
/// ("direct", "decompose", "contract", "judge", ...); `step` and `chain_id`
/// are trace labels the backends ignore.
struct CompletionRequest {
    std::string prompt;
    double temperature = 1.0;
    std::optional<int> max_output_tokens;
    std::string tag = "direct";
    int step = -1;
    std::string chain_id;
};

void check_valid(const CompletionRequest& request);

struct CompletionResponse {
    std::string text;
    TokenUsage usage;          // invocations is always 1
    std::string backend_id;
    bool usage_estimated = false;
};

/// Whitespace-token approximation used when a backend reports no usage:
/// token count x 1.3, rounded down.
std::int64_t estimate_tokens(const std::string& text);

enum class BackendKind { HTTP_CHAT, SCRIPTED };

struct RetryPolicy {
    int max_attempts = 3;
    std::vector<std::chrono::milliseconds> backoff = {
        std::chrono::milliseconds(1000), std::chrono::milliseconds(2000),
        std::chrono::milliseconds(4000)};
};

struct BackendConfig {
    BackendKind kind = BackendKind::SCRIPTED;
    std::string endpoint;      // HTTP_CHAT: full chat-completions URL
    std::string model_name;    // HTTP_CHAT
    std::string api_key_env;   // HTTP_CHAT: env var holding the secret
    RetryPolicy retry;
    std::chrono::milliseconds timeout = std::chrono::milliseconds(60000);
    std::string script_path;   // SCRIPTED
    int in_flight_cap = 32;
};

class Backend {
public:
    virtual ~Backend() = default;
    virtual CompletionResponse complete(const CompletionRequest& request) = 0;
    virtual std::string id() const = 0;
};

} // namespace statechain::llm
