#pragma once

#include <optional>

#include "extcover/branch.hpp"
#include "extcover/chordal.hpp"
#include "extcover/instance.hpp"
#include "extcover/oracle.hpp"

namespace extcover {

struct WeightedGraph {
    Graph graph;
    std::vector<long long> weights;  // non-negative, one per vertex
};

// Weight file: one integer per line, vertex order 1..n.
std::vector<long long> parse_weights(std::istream& in, int n);
void write_weights(std::ostream& out, const std::vector<long long>& weights);

struct WmisdsResult {
    long long value = 0;
    VertexSet solution;
};

// Minimum-weight independent dominating set of a chordal graph, exact.
// Dynamic program over the elimination forest induced by the PEO: one
// clique bag {v} ∪ madj(v) per vertex, interface states keyed by the
// solution vertex inside the separator (if any) and the subset still
// undominated from below, with dominance pruning. Interface frontiers
// stay chains on interval graphs and forests.
WmisdsResult wmisds_chordal(const WeightedGraph& wg, const std::vector<int>& peo);

struct ChordalDecision {
    bool yes = false;
    std::optional<Certificate> certificate;
};

// Ext VC on chordal graphs: weight U with 1 inside G[N[U]], decide whether
// a zero-weight independent dominating set exists.
ChordalDecision decide_ext_vc_chordal(const ExtInstance& inst);

struct MaxExtResult {
    int value = 0;           // maximum |S ∩ U| over minimal vertex covers S
    VertexSet kept;          // extendible subset U' attaining the value
    Certificate certificate; // minimal vertex cover containing U'
};

// Exact Max Ext VC on chordal graphs with independent U via
// |U| - opt_WMinISDS(G[N[U]], 1 on U).
MaxExtResult max_ext_vc_chordal(const Graph& g, const VertexSet& u);

// |V| - opt Max Ext VC on (g, V\U); chordal route when applicable, else
// the oracle at desk scale.
int min_ext_is_value(const Graph& g, const VertexSet& u,
                     int oracle_bound = kDefaultOracleBound);

}  // namespace extcover
