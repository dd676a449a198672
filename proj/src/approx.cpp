#include "extcover/approx.hpp"

#include <algorithm>

#include "extcover/errors.hpp"

namespace extcover {

ApproxResult approx_bipartite(const Graph& g, const VertexSet& u) {
    auto cls = classify(g);
    if (!cls.bipartition)
        throw Unsupported("approx_bipartite: input graph is not bipartite");
    const auto& [side_a, side_b] = *cls.bipartition;

    VertexSet cover(g.n());
    for (const auto& comp : cls.components) {
        if (comp.cardinality() == 1) continue;  // isolated vertex
        VertexSet a = comp.set_intersection(side_a);
        VertexSet b = comp.set_intersection(side_b);
        int ua = a.set_intersection(u).cardinality();
        int ub = b.set_intersection(u).cardinality();
        const VertexSet& pick = (ub > ua) ? b : a;
        pick.for_each([&](int v) { cover.add(v); });
    }

    ApproxResult out;
    out.certificate.solution = cover;
    cover.for_each([&](int v) {
        for (int w : g.neighbors(v))
            if (!cover.contains(w)) {
                out.certificate.edge_witnesses[v] = {v, w};
                break;
            }
    });
    out.value = cover.set_intersection(u).cardinality();
    return out;
}

ApproxResult approx_degree(const Graph& g, const VertexSet& u) {
    VertexSet boundary = open_neighborhood(g, u);
    auto sub = induced_subgraph(g, boundary);
    std::vector<int> order(sub.graph.n());
    for (int i = 0; i < sub.graph.n(); ++i) order[i] = i;
    std::vector<int> color = greedy_coloring(sub.graph, order);

    int classes = 0;
    for (int c : color) classes = std::max(classes, c + 1);
    std::vector<VertexSet> cls(classes, VertexSet(g.n()));
    for (int i = 0; i < sub.graph.n(); ++i) cls[color[i]].add(sub.to_original[i]);

    int best = -1, best_hits = -1;
    for (int i = 0; i < classes; ++i) {
        int hits = open_neighborhood(g, cls[i]).set_intersection(u).cardinality();
        if (hits > best_hits) {
            best = i;
            best_hits = hits;
        }
    }

    VertexSet chosen = (best >= 0) ? cls[best] : VertexSet(g.n());
    VertexSet kept = open_neighborhood(g, chosen).set_intersection(u);

    // completion prefers vertices outside U, so the cover keeps as much of
    // U as the guess allows
    std::vector<int> completion_order;
    completion_order.reserve(g.n());
    for (int v = 0; v < g.n(); ++v)
        if (!u.contains(v)) completion_order.push_back(v);
    for (int v = 0; v < g.n(); ++v)
        if (u.contains(v)) completion_order.push_back(v);

    ApproxResult out;
    out.certificate = complete_to_certificate(g, kept, chosen, completion_order);
    out.value = out.certificate.solution.set_intersection(u).cardinality();
    return out;
}

}  // namespace extcover
