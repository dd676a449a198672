#pragma once

#include "extcover/branch.hpp"
#include "extcover/instance.hpp"

namespace extcover {

struct ApproxResult {
    Certificate certificate;  // minimal vertex cover of g
    int value = 0;            // |solution ∩ U|
};

// Per connected component, the bipartition side holding more U-vertices;
// 2 * value >= opt Max Ext VC. Isolated vertices join no minimal cover
// and are skipped.
ApproxResult approx_bipartite(const Graph& g, const VertexSet& u);

// Greedy-colors G[N(U)\U] into at most max_degree classes, keeps the class
// dominating the most of U, completes to a minimal cover;
// max_degree * value >= |U| - |{u with N(u) inside U}| and the output is
// always a minimal vertex cover.
ApproxResult approx_degree(const Graph& g, const VertexSet& u);

}  // namespace extcover
