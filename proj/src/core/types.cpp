// SPDX-License-Identifier: Apache-2.0
#include "statechain/core/types.hpp"

#include <algorithm>
#include <cctype>

#include "statechain/core/errors.hpp"

namespace statechain {

namespace {

bool is_blank(const std::string& s) {
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isspace(c) != 0; });
}

} // namespace

const char* domain_name(Domain d) {
    switch (d) {
        case Domain::MATH: return "math";
        case Domain::CODE: return "code";
        case Domain::MULTIHOP_QA: return "multihop_qa";
    }
    return "math";
}

std::optional<Domain> domain_from_name(const std::string& name) {
    if (name == "math") return Domain::MATH;
    if (name == "code") return Domain::CODE;
    if (name == "multihop_qa" || name == "multihop-qa" || name == "qa")
        return Domain::MULTIHOP_QA;
    return std::nullopt;
}

const char* origin_name(CandidateOrigin origin) {
    switch (origin) {
        case CandidateOrigin::CURRENT_STATE: return "current_state";
        case CandidateOrigin::DAG_EXECUTION: return "dag_execution";
        case CandidateOrigin::NEXT_STATE: return "next_state";
    }
    return "current_state";
}

std::optional<CandidateOrigin> origin_from_name(const std::string& name) {
    if (name == "current_state") return CandidateOrigin::CURRENT_STATE;
    if (name == "dag_execution") return CandidateOrigin::DAG_EXECUTION;
    if (name == "next_state") return CandidateOrigin::NEXT_STATE;
    return std::nullopt;
}

TokenUsage sum_usage(std::span<const TokenUsage> parts) {
    TokenUsage total;
    for (const auto& part : parts) total += part;
    return total;
}

void check_valid(const Question& q) {
    if (q.text.empty() || is_blank(q.text))
        throw Error(ErrorCode::StructuralError, "question text is empty");
    if (q.chain_index < 0)
        throw Error(ErrorCode::StructuralError, "chain_index is negative");
    if (q.domain == Domain::CODE && !q.contexts.has_value())
        throw Error(ErrorCode::StructuralError, "code question requires contexts");
}

TokenUsage TransitionRecord::step_usage() const {
    TokenUsage total = overhead_usage;
    for (const auto& c : candidates) total += c.usage;
    total += verdict.usage;
    return total;
}

const CandidateSolution& TransitionRecord::selected_candidate() const {
    for (const auto& c : candidates) {
        if (c.origin == verdict.selected) return c;
    }
    throw Error(ErrorCode::StructuralError,
                "verdict selects an origin that is not among the candidates");
}

} // namespace statechain
