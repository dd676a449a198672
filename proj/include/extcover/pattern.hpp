#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "extcover/graph.hpp"

namespace extcover {

// A small fixed connected pattern graph H used by the H-cover operations.
class Pattern {
public:
    static constexpr int kDefaultMaxOrder = 5;

    explicit Pattern(Graph h, int max_order = kDefaultMaxOrder);

    const Graph& graph() const { return h_; }
    int order() const { return h_.n(); }

    static Pattern k2();
    static Pattern k3();
    static Pattern p3();
    static Pattern clique(int k);
    static Pattern path(int k);

private:
    Graph h_;
};

// Vertex sets of subgraph-isomorphic copies of h in g, each distinct set
// once, ascending lexicographic order. With an anchor, only copies
// containing it.
std::vector<VertexSet> enumerate_copies(const Graph& g, const Pattern& h,
                                        std::optional<int> anchor = std::nullopt);

// Early-exit variant: is there a copy of h inside g[within] (and through
// `through`, when given)?
bool has_copy_within(const Graph& g, const Pattern& h, const VertexSet& within,
                     std::optional<int> through = std::nullopt);

}  // namespace extcover
