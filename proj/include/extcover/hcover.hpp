#pragma once

#include <map>
#include <optional>

#include "extcover/certify.hpp"
#include "extcover/instance.hpp"

namespace extcover {

inline constexpr long long kDefaultHCoverBudget = 1 << 20;

struct HCoverDecision {
    bool yes = false;
    // per-forced-vertex private copy H_u with V(H_u) ∩ U = {u}
    std::map<int, std::vector<int>> witness_family;
    std::optional<Certificate> certificate;
};

// Ext H-cover by the two-condition characterization: pick one candidate
// copy per forced vertex such that the union minus U stays H-free,
// backtracking in fail-first order. Refuses when the product of candidate
// counts exceeds the budget.
HCoverDecision decide_ext_hcover(const Graph& g, const Pattern& h, const VertexSet& u,
                                 long long budget = kDefaultHCoverBudget);

// Maximal induced H-free subgraph inside U: the complement-dual call
// decide_ext_hcover(g, h, V \ U).
bool decide_ext_induced_hfree(const Graph& g, const Pattern& h, const VertexSet& u,
                              long long budget = kDefaultHCoverBudget);

}  // namespace extcover
