// SPDX-License-Identifier: Apache-2.0
#include <doctest/doctest.h>

#include <random>

#include "statechain/core/trace.hpp"

using namespace statechain;

namespace {

std::string random_text(std::mt19937& rng, std::size_t max_len) {
    static const std::string alphabet =
        "abcdefghijklmnopqrstuvwxyz ABC123<>/&\"\\\n{}[]";
    std::uniform_int_distribution<std::size_t> len(1, max_len);
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::string s;
    for (std::size_t i = 0, n = len(rng); i < n; ++i) s += alphabet[pick(rng)];
    return s;
}

ReasoningChain random_chain(std::mt19937& rng) {
    std::uniform_int_distribution<int> small(0, 3);
    std::uniform_int_distribution<std::int64_t> tok(0, 5000);
    auto usage = [&] { return TokenUsage{tok(rng), tok(rng), small(rng)}; };

    ReasoningChain chain;
    chain.original = {random_text(rng, 80), Domain::MATH, std::nullopt, 0};
    const int steps = 1 + small(rng);
    for (int i = 0; i < steps; ++i) {
        TransitionRecord rec;
        rec.from_state = {random_text(rng, 60), Domain::MATH, std::nullopt, i};
        const int nodes = small(rng);
        for (int k = 0; k < nodes; ++k) {
            DagNode node{k, random_text(rng, 30), random_text(rng, 10), {}};
            if (k > 0 && small(rng) > 1) node.depends.push_back(k - 1);
            rec.dag.nodes.push_back(std::move(node));
        }
        rec.dag.source_state = i;
        if (small(rng) > 0)
            rec.contracted = Question{random_text(rng, 60), Domain::MATH, std::nullopt, i + 1};
        for (auto origin : {CandidateOrigin::CURRENT_STATE, CandidateOrigin::DAG_EXECUTION,
                            CandidateOrigin::NEXT_STATE})
            rec.candidates.push_back(
                {origin, random_text(rng, 10), random_text(rng, 120), usage()});
        rec.verdict = {CandidateOrigin::NEXT_STATE, random_text(rng, 40), usage()};
        rec.overhead_usage = usage();
        rec.terminated = (i == steps - 1);
        chain.steps.push_back(std::move(rec));
    }
    chain.final_answer = random_text(rng, 10);
    TokenUsage total;
    for (const auto& s : chain.steps) total += s.step_usage();
    chain.total_usage = total;
    chain.config_snapshot = {{"max_transitions", 3}, {"temperature", 1.0}};
    chain.stop_reason = "judge";
    return chain;
}

} // namespace

TEST_CASE("chain trace round-trips through JSON") {
    std::mt19937 rng(99);
    for (int i = 0; i < 25; ++i) {
        auto chain = random_chain(rng);
        auto text = chain_to_trace(chain);
        auto parsed = chain_from_trace(text);
        CHECK(parsed == chain);
        // and serialization is stable
        CHECK(chain_to_trace(parsed) == text);
    }
}

TEST_CASE("trace serialization is byte-stable for equal values") {
    std::mt19937 a(1234), b(1234);
    CHECK(chain_to_trace(random_chain(a)) == chain_to_trace(random_chain(b)));
}

TEST_CASE("optional fields serialize as null") {
    Question q{"x", Domain::MATH, std::nullopt, 0};
    nlohmann::json j = q;
    CHECK(j.at("contexts").is_null());
    q.contexts = "ctx";
    j = q;
    CHECK(j.at("contexts") == "ctx");
}

TEST_CASE("total_usage of a chain equals the sum of embedded usages") {
    std::mt19937 rng(5);
    for (int i = 0; i < 10; ++i) {
        auto chain = random_chain(rng);
        TokenUsage total;
        for (const auto& s : chain.steps) {
            for (const auto& c : s.candidates) total += c.usage;
            total += s.verdict.usage;
            total += s.overhead_usage;
        }
        CHECK(chain.total_usage == total);
    }
}
