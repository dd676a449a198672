#include "extcover/certify.hpp"

#include <algorithm>

namespace extcover {

bool is_minimal_vertex_cover(const Graph& g, const VertexSet& s) {
    for (auto [u, v] : g.edges())
        if (!s.contains(u) && !s.contains(v)) return false;
    bool ok = true;
    s.for_each([&](int v) {
        bool has_private = false;
        for (int u : g.neighbors(v)) has_private |= !s.contains(u);
        ok &= has_private;
    });
    return ok;
}

bool is_maximal_independent_set(const Graph& g, const VertexSet& s) {
    bool independent = true;
    s.for_each([&](int v) {
        for (int u : g.neighbors(v)) independent &= !s.contains(u);
    });
    if (!independent) return false;
    return closed_neighborhood(g, s).cardinality() == g.n();
}

bool is_independent_dominating_within(const Graph& g, const VertexSet& region,
                                      const VertexSet& s) {
    if (!s.is_subset_of(region))
        throw std::invalid_argument("is_independent_dominating_within: s must lie in region");
    bool independent = true;
    s.for_each([&](int v) {
        for (int u : g.neighbors(v)) independent &= !s.contains(u);
    });
    if (!independent) return false;
    bool dominated = true;
    region.for_each([&](int v) {
        if (s.contains(v)) return;
        bool hit = false;
        for (int u : g.neighbors(v)) hit |= s.contains(u);
        dominated &= hit;
    });
    return dominated;
}

bool is_h_free(const Graph& g, const Pattern& h, const VertexSet& w) {
    return !has_copy_within(g, h, w);
}

bool is_minimal_h_cover(const Graph& g, const Pattern& h, const VertexSet& s) {
    auto copies = enumerate_copies(g, h);
    for (const auto& copy : copies)
        if (!copy.intersects(s)) return false;
    bool ok = true;
    s.for_each([&](int v) {
        bool has_private = false;
        for (const auto& copy : copies) {
            if (!copy.contains(v)) continue;
            if (copy.set_intersection(s).cardinality() == 1) {
                has_private = true;
                break;
            }
        }
        ok &= has_private;
    });
    return ok;
}

static bool fail(std::string* why, const std::string& message) {
    if (why) *why = message;
    return false;
}

bool verify_vc_certificate(const Graph& g, const VertexSet& forced,
                           const Certificate& cert, std::string* why) {
    if (!forced.is_subset_of(cert.solution))
        return fail(why, "forced set not contained in solution");
    if (!is_minimal_vertex_cover(g, cert.solution))
        return fail(why, "solution is not a minimal vertex cover");
    bool ok = true;
    std::string message;
    cert.solution.for_each([&](int v) {
        auto it = cert.edge_witnesses.find(v);
        if (it == cert.edge_witnesses.end()) {
            ok = false;
            message = "missing witness for vertex " + std::to_string(v);
            return;
        }
        auto [a, b] = it->second;
        int other = (a == v) ? b : a;
        if ((a != v && b != v) || !g.has_edge(v, other) || cert.solution.contains(other)) {
            ok = false;
            message = "invalid private edge for vertex " + std::to_string(v);
        }
    });
    if (!ok) return fail(why, message);
    return true;
}

bool verify_hcover_certificate(const Graph& g, const Pattern& h, const VertexSet& forced,
                               const Certificate& cert, std::string* why) {
    if (!forced.is_subset_of(cert.solution))
        return fail(why, "forced set not contained in solution");
    if (!is_minimal_h_cover(g, h, cert.solution))
        return fail(why, "solution is not a minimal H-cover");
    bool ok = true;
    std::string message;
    cert.solution.for_each([&](int v) {
        auto it = cert.copy_witnesses.find(v);
        if (it == cert.copy_witnesses.end()) {
            ok = false;
            message = "missing witness copy for vertex " + std::to_string(v);
            return;
        }
        VertexSet copy = VertexSet::from_vector(g.n(), it->second);
        if (!copy.contains(v) || copy.set_intersection(cert.solution).cardinality() != 1 ||
            !has_copy_within(g, h, copy, v) ||
            copy.cardinality() != h.order()) {
            ok = false;
            message = "invalid private copy for vertex " + std::to_string(v);
        }
    });
    if (!ok) return fail(why, message);
    return true;
}

}  // namespace extcover
