#include "extcover/pattern.hpp"

#include <algorithm>
#include <set>

namespace extcover {

Pattern::Pattern(Graph h, int max_order) : h_(std::move(h)) {
    if (h_.n() < 2) throw std::invalid_argument("Pattern: at least 2 vertices required");
    if (h_.n() > max_order)
        throw std::invalid_argument("Pattern: order exceeds configured bound");
    auto comps = classify(h_).components;
    if (comps.size() != 1) throw std::invalid_argument("Pattern: H must be connected");
}

Pattern Pattern::k2() { return clique(2); }
Pattern Pattern::k3() { return clique(3); }
Pattern Pattern::p3() { return path(3); }

Pattern Pattern::clique(int k) {
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) edges.emplace_back(i, j);
    return Pattern(Graph(k, std::move(edges)));
}

Pattern Pattern::path(int k) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
    return Pattern(Graph(k, std::move(edges)));
}

namespace {

// Pattern vertices in a connect-as-you-go order starting from `root`:
// every vertex after the first has an already-placed neighbor.
std::vector<int> connected_order(const Graph& h, int root) {
    std::vector<int> order = {root};
    std::vector<char> placed(h.n(), 0);
    placed[root] = 1;
    while (static_cast<int>(order.size()) < h.n()) {
        for (int v = 0; v < h.n(); ++v) {
            if (placed[v]) continue;
            bool anchored = false;
            for (int u : h.neighbors(v)) anchored |= placed[u];
            if (anchored) {
                order.push_back(v);
                placed[v] = 1;
                break;
            }
        }
    }
    return order;
}

struct CopySearch {
    const Graph& g;
    const Graph& h;
    const VertexSet* within = nullptr;
    std::function<bool(const std::vector<int>&)> sink;  // returns true to stop

    std::vector<int> order;   // h vertices in placement order
    std::vector<int> image;   // h vertex -> g vertex (-1 unplaced)
    std::vector<char> used;   // g vertex already used

    bool extend(size_t depth) {
        if (depth == order.size()) {
            std::vector<int> verts(image.begin(), image.end());
            std::sort(verts.begin(), verts.end());
            return sink(verts);
        }
        int hv = order[depth];
        // candidates: g-neighbors of some already-placed h-neighbor
        int anchor_h = -1;
        for (int u : h.neighbors(hv))
            if (image[u] != -1) {
                anchor_h = u;
                break;
            }
        auto try_vertex = [&](int gv) -> bool {
            if (used[gv]) return false;
            if (within && !within->contains(gv)) return false;
            for (int u : h.neighbors(hv)) {
                if (image[u] == -1) continue;
                if (!g.has_edge(gv, image[u])) return false;
            }
            image[hv] = gv;
            used[gv] = 1;
            bool stop = extend(depth + 1);
            used[gv] = 0;
            image[hv] = -1;
            return stop;
        };
        if (anchor_h >= 0) {
            for (int gv : g.neighbors(image[anchor_h]))
                if (try_vertex(gv)) return true;
        } else {
            for (int gv = 0; gv < g.n(); ++gv)
                if (try_vertex(gv)) return true;
        }
        return false;
    }

    // Root placement fixed to a specific g vertex.
    bool run_anchored(int g_anchor) {
        for (int hr = 0; hr < h.n(); ++hr) {
            order = connected_order(h, hr);
            image.assign(h.n(), -1);
            used.assign(g.n(), 0);
            if (within && !within->contains(g_anchor)) return false;
            image[hr] = g_anchor;
            used[g_anchor] = 1;
            bool stop = extend(1);
            used[g_anchor] = 0;
            image[hr] = -1;
            if (stop) return true;
        }
        return false;
    }

    bool run_free() {
        order = connected_order(h, 0);
        image.assign(h.n(), -1);
        used.assign(g.n(), 0);
        return extend(0);
    }
};

}  // namespace

std::vector<VertexSet> enumerate_copies(const Graph& g, const Pattern& h,
                                        std::optional<int> anchor) {
    std::set<std::vector<int>> seen;
    CopySearch search{g, h.graph(), nullptr, {}, {}, {}, {}};
    search.sink = [&](const std::vector<int>& verts) {
        seen.insert(verts);
        return false;
    };
    if (anchor) {
        if (*anchor < 0 || *anchor >= g.n())
            throw std::invalid_argument("enumerate_copies: anchor out of range");
        search.run_anchored(*anchor);
    } else {
        search.run_free();
    }
    std::vector<VertexSet> out;
    out.reserve(seen.size());
    for (const auto& verts : seen) out.push_back(VertexSet::from_vector(g.n(), verts));
    return out;
}

bool has_copy_within(const Graph& g, const Pattern& h, const VertexSet& within,
                     std::optional<int> through) {
    CopySearch search{g, h.graph(), &within, {}, {}, {}, {}};
    search.sink = [](const std::vector<int>&) { return true; };
    if (through) return search.run_anchored(*through);
    return search.run_free();
}

}  // namespace extcover
