// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <set>
#include <string>
#include <vector>

#include "statechain/core/types.hpp"

namespace statechain {

struct DagValidation {
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

/// Checks every structural invariant: ids are exactly 0..n-1 in order,
/// dependencies point strictly backward (j < k), no duplicate dependencies,
/// descriptions nonempty, and -- although the forward-edge rule already
/// implies it -- an explicit acyclicity check. Collects violations instead
/// of aborting.
DagValidation validate_dag(const ReasoningDag& dag);

/// Throws Error(StructuralError) listing the violations when validation fails.
void require_valid(const ReasoningDag& dag);

/// Ids of nodes with no dependencies (no incoming edges).
std::set<int> independent_nodes(const ReasoningDag& dag);

/// Node count of the longest dependency path; 0 for the empty DAG,
/// 1 for a single node.
int dag_depth(const ReasoningDag& dag);

/// Layer k holds the nodes whose longest dependency path has length k.
/// Every dependency of a node lies in a strictly earlier layer.
std::vector<std::set<int>> topological_layers(const ReasoningDag& dag);

/// Transition-budget estimate: the depth of the DAG, since each transition
/// ideally eliminates one layer of independent nodes. Empty DAG falls back
/// to `default_budget`.
int suggested_max_transitions(const ReasoningDag& dag, int default_budget);

} // namespace statechain
