#pragma once

#include <iosfwd>
#include <optional>

#include "extcover/branch.hpp"
#include "extcover/instance.hpp"

namespace extcover {

// Black-and-white colored tree; candidates for the forbidden class.
struct ColoredTree {
    Graph tree;
    VertexSet black;
};

// Linear-time Ext VC decision on forests via the reduction-rule engine,
// which always reaches a verdict on forests.
struct ForestDecision {
    bool yes = false;
    std::optional<Certificate> certificate;
};
ForestDecision decide_forest(const ExtInstance& inst);

// Membership in the inductive class: base is a single black vertex, steps
// attach a black-white-white path by its white end to a black vertex.
// Decided by reverse peeling of black leaves.
bool is_in_T(const ColoredTree& ct);

// Vertex set of an induced edge-full subtree whose coloring lies in the
// forbidden class, if one exists. Requires a tree with independent u.
// Absence is equivalent to decide_forest saying YES.
std::optional<VertexSet> find_forbidden_subtree(const Graph& t, const VertexSet& u,
                                                int bound = 18);

// DIMACS edge block followed by a "b v1 v2 ..." line of black vertices.
ColoredTree parse_colored_tree(std::istream& in);
void write_colored_tree(std::ostream& out, const ColoredTree& ct);

}  // namespace extcover
