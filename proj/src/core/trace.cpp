// SPDX-License-Identifier: Apache-2.0
#include "statechain/core/trace.hpp"

#include <fstream>
#include <sstream>

#include "statechain/core/errors.hpp"

namespace statechain {

namespace {

template <typename T>
nlohmann::json optional_to_json(const std::optional<T>& value) {
    if (!value) return nullptr;
    return nlohmann::json(*value);
}

} // namespace

void to_json(nlohmann::json& j, const TokenUsage& u) {
    j = {{"prompt_tokens", u.prompt_tokens},
         {"completion_tokens", u.completion_tokens},
         {"invocations", u.invocations}};
}

void from_json(const nlohmann::json& j, TokenUsage& u) {
    j.at("prompt_tokens").get_to(u.prompt_tokens);
    j.at("completion_tokens").get_to(u.completion_tokens);
    j.at("invocations").get_to(u.invocations);
}

void to_json(nlohmann::json& j, const Question& q) {
    j = {{"text", q.text},
         {"domain", domain_name(q.domain)},
         {"contexts", optional_to_json(q.contexts)},
         {"chain_index", q.chain_index}};
}

void from_json(const nlohmann::json& j, Question& q) {
    j.at("text").get_to(q.text);
    auto domain = domain_from_name(j.at("domain").get<std::string>());
    if (!domain)
        throw Error(ErrorCode::ParseError,
                    "unknown domain '" + j.at("domain").get<std::string>() + "'");
    q.domain = *domain;
    if (j.contains("contexts") && !j.at("contexts").is_null())
        q.contexts = j.at("contexts").get<std::string>();
    else
        q.contexts.reset();
    j.at("chain_index").get_to(q.chain_index);
}

void to_json(nlohmann::json& j, const DagNode& n) {
    j = {{"id", n.id},
         {"description", n.description},
         {"answer", optional_to_json(n.answer)},
         {"depends", n.depends}};
}

void from_json(const nlohmann::json& j, DagNode& n) {
    j.at("id").get_to(n.id);
    j.at("description").get_to(n.description);
    if (j.contains("answer") && !j.at("answer").is_null())
        n.answer = j.at("answer").get<std::string>();
    else
        n.answer.reset();
    j.at("depends").get_to(n.depends);
}

void to_json(nlohmann::json& j, const ReasoningDag& d) {
    j = {{"nodes", d.nodes}, {"source_state", d.source_state}};
}

void from_json(const nlohmann::json& j, ReasoningDag& d) {
    j.at("nodes").get_to(d.nodes);
    j.at("source_state").get_to(d.source_state);
}

void to_json(nlohmann::json& j, const CandidateSolution& c) {
    j = {{"origin", origin_name(c.origin)},
         {"answer", c.answer},
         {"trajectory", c.trajectory},
         {"usage", c.usage},
         {"parse_failed", c.parse_failed},
         {"partial", c.partial},
         {"completed_layers", c.completed_layers}};
}

void from_json(const nlohmann::json& j, CandidateSolution& c) {
    auto origin = origin_from_name(j.at("origin").get<std::string>());
    if (!origin)
        throw Error(ErrorCode::ParseError,
                    "unknown origin '" + j.at("origin").get<std::string>() + "'");
    c.origin = *origin;
    j.at("answer").get_to(c.answer);
    j.at("trajectory").get_to(c.trajectory);
    j.at("usage").get_to(c.usage);
    j.at("parse_failed").get_to(c.parse_failed);
    j.at("partial").get_to(c.partial);
    j.at("completed_layers").get_to(c.completed_layers);
}

void to_json(nlohmann::json& j, const JudgeVerdict& v) {
    j = {{"selected", origin_name(v.selected)},
         {"rationale", v.rationale},
         {"usage", v.usage}};
}

void from_json(const nlohmann::json& j, JudgeVerdict& v) {
    auto selected = origin_from_name(j.at("selected").get<std::string>());
    if (!selected)
        throw Error(ErrorCode::ParseError,
                    "unknown origin '" + j.at("selected").get<std::string>() + "'");
    v.selected = *selected;
    j.at("rationale").get_to(v.rationale);
    j.at("usage").get_to(v.usage);
}

void to_json(nlohmann::json& j, const TransitionRecord& r) {
    j = {{"from_state", r.from_state},
         {"dag", r.dag},
         {"contracted", optional_to_json(r.contracted)},
         {"candidates", r.candidates},
         {"verdict", r.verdict},
         {"terminated", r.terminated},
         {"known_condition_ids", r.known_condition_ids},
         {"overhead_usage", r.overhead_usage},
         {"failure", r.failure}};
}

void from_json(const nlohmann::json& j, TransitionRecord& r) {
    j.at("from_state").get_to(r.from_state);
    j.at("dag").get_to(r.dag);
    if (j.contains("contracted") && !j.at("contracted").is_null())
        r.contracted = j.at("contracted").get<Question>();
    else
        r.contracted.reset();
    j.at("candidates").get_to(r.candidates);
    j.at("verdict").get_to(r.verdict);
    j.at("terminated").get_to(r.terminated);
    j.at("known_condition_ids").get_to(r.known_condition_ids);
    j.at("overhead_usage").get_to(r.overhead_usage);
    j.at("failure").get_to(r.failure);
}

void to_json(nlohmann::json& j, const ReasoningChain& c) {
    j = {{"original", c.original},
         {"steps", c.steps},
         {"final_answer", c.final_answer},
         {"total_usage", c.total_usage},
         {"config_snapshot", c.config_snapshot},
         {"stop_reason", c.stop_reason}};
}

void from_json(const nlohmann::json& j, ReasoningChain& c) {
    j.at("original").get_to(c.original);
    j.at("steps").get_to(c.steps);
    j.at("final_answer").get_to(c.final_answer);
    j.at("total_usage").get_to(c.total_usage);
    c.config_snapshot = j.at("config_snapshot");
    j.at("stop_reason").get_to(c.stop_reason);
}

std::string chain_to_trace(const ReasoningChain& chain) {
    nlohmann::json j = chain;
    return j.dump(2) + "\n";
}

ReasoningChain chain_from_trace(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    return j.get<ReasoningChain>();
}

void write_chain_trace(const ReasoningChain& chain, const std::filesystem::path& path) {
    write_text_file(path, chain_to_trace(chain));
}

ReasoningChain read_chain_trace(const std::filesystem::path& path) {
    return chain_from_trace(read_text_file(path));
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorCode::ConfigError, "cannot open " + path.string() + " for writing");
    out << text;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::ConfigError, "cannot open " + path.string() + " for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace statechain
