// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace statechain {

enum class Domain { MATH, CODE, MULTIHOP_QA };

const char* domain_name(Domain d);
std::optional<Domain> domain_from_name(const std::string& name);

/// Token accounting for one or more backend invocations.
struct TokenUsage {
    std::int64_t prompt_tokens = 0;
    std::int64_t completion_tokens = 0;
    std::int64_t invocations = 0;

    TokenUsage& operator+=(const TokenUsage& other) {
        prompt_tokens += other.prompt_tokens;
        completion_tokens += other.completion_tokens;
        invocations += other.invocations;
        return *this;
    }
    friend TokenUsage operator+(TokenUsage a, const TokenUsage& b) { return a += b; }
    friend bool operator==(const TokenUsage&, const TokenUsage&) = default;

    std::int64_t total_tokens() const { return prompt_tokens + completion_tokens; }
};

TokenUsage sum_usage(std::span<const TokenUsage> parts);

/// A self-contained problem state Q_i. chain_index is the position in the
/// reasoning chain; the original question always sits at index 0.
struct Question {
    std::string text;
    Domain domain = Domain::MATH;
    std::optional<std::string> contexts;
    int chain_index = 0;

    friend bool operator==(const Question&, const Question&) = default;
};

/// Throws Error(StructuralError) when an invariant is broken: empty text,
/// negative chain_index, or a CODE question without contexts.
void check_valid(const Question& q);

/// One node of the temporary dependency scaffold. Dependencies point at
/// strictly smaller ids, so edges always run forward.
struct DagNode {
    int id = 0;
    std::string description;
    std::optional<std::string> answer;
    std::vector<int> depends;

    friend bool operator==(const DagNode&, const DagNode&) = default;
};

/// The dependency scaffold extracted from one state's reasoning trajectory.
/// Node ids are exactly 0..n-1 in list order.
struct ReasoningDag {
    std::vector<DagNode> nodes;
    int source_state = 0;

    bool empty() const { return nodes.empty(); }
    std::size_t size() const { return nodes.size(); }

    friend bool operator==(const ReasoningDag&, const ReasoningDag&) = default;
};

enum class CandidateOrigin { CURRENT_STATE, DAG_EXECUTION, NEXT_STATE };

const char* origin_name(CandidateOrigin origin);
std::optional<CandidateOrigin> origin_from_name(const std::string& name);

/// One member of the per-step solution triplet.
struct CandidateSolution {
    CandidateOrigin origin = CandidateOrigin::CURRENT_STATE;
    std::string answer;
    std::string trajectory;
    TokenUsage usage;
    bool parse_failed = false;   // answer extraction failed; trajectory kept
    bool partial = false;        // DAG execution did not finish every layer
    int completed_layers = -1;   // deepest fully solved layer when partial

    friend bool operator==(const CandidateSolution&, const CandidateSolution&) = default;
};

struct JudgeVerdict {
    CandidateOrigin selected = CandidateOrigin::CURRENT_STATE;
    std::string rationale;
    TokenUsage usage;

    friend bool operator==(const JudgeVerdict&, const JudgeVerdict&) = default;
};

/// One decompose -> contract -> solve-triplet -> judge step.
struct TransitionRecord {
    Question from_state;
    ReasoningDag dag;
    std::optional<Question> contracted;
    std::vector<CandidateSolution> candidates;
    JudgeVerdict verdict;
    bool terminated = false;
    // ids of the independent nodes folded into the contracted question
    std::vector<int> known_condition_ids;
    // decompose/contract/reprompt calls not attributed to a candidate or verdict
    TokenUsage overhead_usage;
    // empty on the happy path; "decomposition_failed" / "contraction_failed" otherwise
    std::string failure;

    friend bool operator==(const TransitionRecord&, const TransitionRecord&) = default;

    /// Sum of every usage embedded in this record.
    TokenUsage step_usage() const;

    /// The candidate the verdict points at; throws StructuralError when absent.
    const CandidateSolution& selected_candidate() const;
};

/// A full run: the original question, every transition, and the final answer.
struct ReasoningChain {
    Question original;
    std::vector<TransitionRecord> steps;
    std::string final_answer;
    TokenUsage total_usage;
    nlohmann::json config_snapshot = nlohmann::json::object();
    // "judge" (verdict terminated), "budget" (transition budget exhausted),
    // or "degraded" (decomposition/contraction gave up)
    std::string stop_reason;

    friend bool operator==(const ReasoningChain&, const ReasoningChain&) = default;
};

} // namespace statechain
