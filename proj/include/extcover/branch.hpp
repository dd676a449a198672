#pragma once

#include <map>
#include <optional>

#include "extcover/certify.hpp"
#include "extcover/instance.hpp"
#include "extcover/kernelize.hpp"

namespace extcover {

struct BranchStats {
    // Number of leaf verdicts reached by the search (completed guess
    // evaluations); at least 1 on any call.
    long long nodes_expanded = 0;
    int max_depth = 0;
    std::map<Rule, long long> rule_firings;
    // Forced vertices removed when entering a branch child, min/max over
    // every branching transition taken; 0 when the search never branched.
    int branch_u_removed_min = 0;
    int branch_u_removed_max = 0;
};

struct SolveResult {
    bool yes = false;
    std::optional<Certificate> certificate;
    BranchStats stats;
};

// Turns an independent set r ⊆ N[U]∖U dominating U into a verifying
// certificate: S = V ∖ (r ∪ X) for a greedily built maximal extension X.
// Precondition violations are reported, never repaired. The greedy runs
// in ascending id order unless a full vertex order is supplied.
Certificate complete_to_certificate(const Graph& g, const VertexSet& u,
                                    const VertexSet& r);
Certificate complete_to_certificate(const Graph& g, const VertexSet& u,
                                    const VertexSet& r, const std::vector<int>& order);

// Private-edge guessing: picks a forced vertex u and branches on every
// neighbor x outside U, recursing on (G - N[x], U \ N[x]).
// nodes_expanded stays below max_degree^|U| + 1.
SolveResult solve_fpt(const ExtInstance& inst);

// Reduction rules at every node, then minimum-degree branching per
// connected component.
SolveResult solve_exact(const ExtInstance& inst);

}  // namespace extcover
