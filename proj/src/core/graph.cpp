// SPDX-License-Identifier: Apache-2.0
#include "statechain/core/graph.hpp"

#include <algorithm>
#include <unordered_set>

#include "statechain/core/errors.hpp"

namespace statechain {

namespace {

std::string node_label(int id) { return "node " + std::to_string(id); }

// Level of each node: longest chain of depends links ending there, in edges.
// Ids are already topologically ordered, so one forward pass suffices.
std::vector<int> node_levels(const ReasoningDag& dag) {
    std::vector<int> level(dag.nodes.size(), 0);
    for (const auto& node : dag.nodes) {
        for (int dep : node.depends) {
            level[static_cast<std::size_t>(node.id)] =
                std::max(level[static_cast<std::size_t>(node.id)],
                         level[static_cast<std::size_t>(dep)] + 1);
        }
    }
    return level;
}

} // namespace

DagValidation validate_dag(const ReasoningDag& dag) {
    DagValidation result;
    const int n = static_cast<int>(dag.nodes.size());

    for (int i = 0; i < n; ++i) {
        const DagNode& node = dag.nodes[static_cast<std::size_t>(i)];
        if (node.id != i)
            result.violations.push_back("id gap at position " + std::to_string(i) +
                                        " (found id " + std::to_string(node.id) + ")");
        if (node.description.empty())
            result.violations.push_back("empty description at " + node_label(node.id));

        std::unordered_set<int> seen;
        for (int dep : node.depends) {
            if (dep < 0 || dep >= node.id)
                result.violations.push_back("backward edge at " + node_label(node.id) +
                                            " (depends on " + std::to_string(dep) + ")");
            if (!seen.insert(dep).second)
                result.violations.push_back("duplicate dependency " + std::to_string(dep) +
                                            " at " + node_label(node.id));
        }
    }

    // Explicit cycle check via DFS over the dependency links. With ids in
    // order the forward-edge rule already rules cycles out; this guards
    // callers that bypassed the id checks above.
    if (result.ok() && n > 0) {
        enum class Mark { White, Grey, Black };
        std::vector<Mark> mark(static_cast<std::size_t>(n), Mark::White);
        std::vector<int> stack;
        for (int start = 0; start < n; ++start) {
            if (mark[static_cast<std::size_t>(start)] != Mark::White) continue;
            stack.push_back(~start);
            stack.push_back(start);
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                if (v < 0) {
                    mark[static_cast<std::size_t>(~v)] = Mark::Black;
                    continue;
                }
                if (mark[static_cast<std::size_t>(v)] == Mark::Black) continue;
                if (mark[static_cast<std::size_t>(v)] == Mark::Grey) {
                    result.violations.push_back("cycle through " + node_label(v));
                    stack.clear();
                    break;
                }
                mark[static_cast<std::size_t>(v)] = Mark::Grey;
                for (int dep : dag.nodes[static_cast<std::size_t>(v)].depends) {
                    if (mark[static_cast<std::size_t>(dep)] == Mark::White) {
                        stack.push_back(~dep);
                        stack.push_back(dep);
                    } else if (mark[static_cast<std::size_t>(dep)] == Mark::Grey) {
                        result.violations.push_back("cycle through " + node_label(dep));
                    }
                }
            }
        }
    }

    return result;
}

void require_valid(const ReasoningDag& dag) {
    DagValidation validation = validate_dag(dag);
    if (validation.ok()) return;
    std::string message = "invalid DAG:";
    for (const auto& v : validation.violations) message += " " + v + ";";
    throw Error(ErrorCode::StructuralError, message);
}

std::set<int> independent_nodes(const ReasoningDag& dag) {
    require_valid(dag);
    std::set<int> result;
    for (const auto& node : dag.nodes) {
        if (node.depends.empty()) result.insert(node.id);
    }
    return result;
}

int dag_depth(const ReasoningDag& dag) {
    require_valid(dag);
    if (dag.nodes.empty()) return 0;
    const auto levels = node_levels(dag);
    return 1 + *std::max_element(levels.begin(), levels.end());
}

std::vector<std::set<int>> topological_layers(const ReasoningDag& dag) {
    require_valid(dag);
    if (dag.nodes.empty()) return {};
    const auto levels = node_levels(dag);
    const int depth = 1 + *std::max_element(levels.begin(), levels.end());
    std::vector<std::set<int>> layers(static_cast<std::size_t>(depth));
    for (const auto& node : dag.nodes) {
        layers[static_cast<std::size_t>(levels[static_cast<std::size_t>(node.id)])]
            .insert(node.id);
    }
    return layers;
}

int suggested_max_transitions(const ReasoningDag& dag, int default_budget) {
    if (dag.nodes.empty()) return default_budget;
    return dag_depth(dag);
}

} // namespace statechain
