#pragma once

#include <map>
#include <string>
#include <vector>

#include "extcover/graph.hpp"
#include "extcover/pattern.hpp"

namespace extcover {

// A claimed solution set with per-vertex witnesses enabling independent
// verification: a private edge per cover vertex for Ext VC, a private
// pattern copy per cover vertex for Ext H-cover.
struct Certificate {
    VertexSet solution;
    std::map<int, Edge> edge_witnesses;
    std::map<int, std::vector<int>> copy_witnesses;
};

// s covers every edge and every member has a private edge.
bool is_minimal_vertex_cover(const Graph& g, const VertexSet& s);

// s independent with N[s] = V.
bool is_maximal_independent_set(const Graph& g, const VertexSet& s);

// s independent in g and dominating every vertex of `region` within
// g[region]. Requires s ⊆ region.
bool is_independent_dominating_within(const Graph& g, const VertexSet& region,
                                      const VertexSet& s);

// g[w] contains no subgraph copy of h.
bool is_h_free(const Graph& g, const Pattern& h, const VertexSet& w);

// Every copy of h in g meets s, and every member of s owns a private copy.
bool is_minimal_h_cover(const Graph& g, const Pattern& h, const VertexSet& s);

// Full certificate checks; on failure an explanation lands in *why.
bool verify_vc_certificate(const Graph& g, const VertexSet& forced,
                           const Certificate& cert, std::string* why = nullptr);
bool verify_hcover_certificate(const Graph& g, const Pattern& h, const VertexSet& forced,
                               const Certificate& cert, std::string* why = nullptr);

}  // namespace extcover
