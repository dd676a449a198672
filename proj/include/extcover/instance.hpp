#pragma once

#include <optional>

#include "extcover/graph.hpp"
#include "extcover/pattern.hpp"

namespace extcover {

enum class ProblemKind { ExtVC, ExtIS, ExtHCover };

// A graph plus a forced/permitted vertex set U and a problem tag.
struct ExtInstance {
    Graph graph;
    VertexSet forced;
    ProblemKind kind = ProblemKind::ExtVC;
    std::optional<Pattern> pattern;  // required iff kind == ExtHCover

    static ExtInstance ext_vc(Graph g, VertexSet u);
    static ExtInstance ext_is(Graph g, VertexSet u);
    static ExtInstance ext_hcover(Graph g, VertexSet u, Pattern h);
};

}  // namespace extcover
