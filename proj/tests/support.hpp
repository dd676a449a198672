#pragma once

// Shared test fixtures: tiny graph builders, subset-based reference
// oracles kept independent of the library's enumeration path, and seeded
// random instance generators.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "extcover/generators.hpp"
#include "extcover/graph.hpp"
#include "extcover/pattern.hpp"

namespace testsupport {

using extcover::Edge;
using extcover::Graph;
using extcover::VertexSet;

inline Graph path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

inline Graph cycle(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

inline Graph complete(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

// star with the center at vertex 0 and `leaves` leaves
inline Graph star(int leaves) {
    std::vector<Edge> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph(leaves + 1, e);
}

inline Graph empty_graph(int n) { return Graph(n, {}); }

inline VertexSet vs(int n, std::initializer_list<int> members) {
    return VertexSet::of(n, members);
}

// ---- mask-based reference layer (n <= 31) ----

inline std::vector<uint32_t> adjacency_masks(const Graph& g) {
    std::vector<uint32_t> adj(g.n(), 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    return adj;
}

inline bool mask_independent(const std::vector<uint32_t>& adj, uint32_t s) {
    for (int v = 0; v < static_cast<int>(adj.size()); ++v)
        if (s >> v & 1 && (adj[v] & s)) return false;
    return true;
}

inline bool mask_maximal_independent(const std::vector<uint32_t>& adj, uint32_t s) {
    if (!mask_independent(adj, s)) return false;
    uint32_t dominated = s;
    for (int v = 0; v < static_cast<int>(adj.size()); ++v)
        if (s >> v & 1) dominated |= adj[v];
    return dominated == (1u << adj.size()) - 1;
}

// every maximal independent set, by direct subset scan
inline std::vector<uint32_t> naive_mis(const Graph& g) {
    auto adj = adjacency_masks(g);
    std::vector<uint32_t> out;
    for (uint32_t s = 0; s < (1u << g.n()); ++s)
        if (mask_maximal_independent(adj, s)) out.push_back(s);
    return out;
}

inline uint32_t to_mask(const VertexSet& s) {
    uint32_t m = 0;
    s.for_each([&](int v) { m |= 1u << v; });
    return m;
}

inline VertexSet from_mask(int n, uint32_t m) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
        if (m >> v & 1) s.add(v);
    return s;
}

inline bool naive_ext_vc(const Graph& g, uint32_t u_mask) {
    for (uint32_t mis : naive_mis(g))
        if (!(mis & u_mask)) return true;
    return false;
}

inline int naive_max_ext_vc(const Graph& g, uint32_t u_mask) {
    int u_size = __builtin_popcount(u_mask);
    int best = 0;
    for (uint32_t mis : naive_mis(g))
        best = std::max(best, u_size - __builtin_popcount(mis & u_mask));
    return best;
}

// objective of the minimization side: |U| + |S \ U| over maximal S
inline int naive_min_ext_is(const Graph& g, uint32_t u_mask) {
    int best = -1;
    for (uint32_t mis : naive_mis(g)) {
        int value = __builtin_popcount(u_mask) + __builtin_popcount(mis & ~u_mask);
        if (best < 0 || value < best) best = value;
    }
    return best;
}

inline long long naive_wisds(const Graph& g, const std::vector<long long>& w) {
    long long best = -1;
    for (uint32_t mis : naive_mis(g)) {
        long long total = 0;
        for (int v = 0; v < g.n(); ++v)
            if (mis >> v & 1) total += w[v];
        if (best < 0 || total < best) best = total;
    }
    return best;
}

inline int naive_independence_number(const Graph& g) {
    int best = 0;
    for (uint32_t mis : naive_mis(g)) best = std::max(best, __builtin_popcount(mis));
    return best;
}

// direct definition check: later neighbors of each vertex pairwise adjacent
inline bool naive_is_peo(const Graph& g, const std::vector<int>& order) {
    std::vector<int> pos(g.n());
    for (int i = 0; i < g.n(); ++i) pos[order[i]] = i;
    for (int v = 0; v < g.n(); ++v) {
        std::vector<int> later;
        for (int u : g.neighbors(v))
            if (pos[u] > pos[v]) later.push_back(u);
        for (size_t a = 0; a < later.size(); ++a)
            for (size_t b = a + 1; b < later.size(); ++b)
                if (!g.has_edge(later[a], later[b])) return false;
    }
    return true;
}

// ---- labeled graph enumeration (n <= 6) ----

inline std::vector<Edge> vertex_pairs(int n) {
    std::vector<Edge> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    return pairs;
}

inline Graph graph_from_edge_mask(int n, const std::vector<Edge>& pairs, uint32_t mask) {
    std::vector<Edge> edges;
    for (size_t b = 0; b < pairs.size(); ++b)
        if (mask >> b & 1) edges.push_back(pairs[b]);
    return Graph(n, edges);
}

// ---- random instance generators ----

inline Graph gnp(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) edges.emplace_back(i, j);
    return Graph(n, edges);
}

inline Graph random_tree(int n, std::mt19937& rng) {
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        edges.emplace_back(pick(rng), v);
    }
    return Graph(n, edges);
}

inline Graph random_bounded_degree(int n, int max_degree, int edge_target,
                                   std::mt19937& rng) {
    std::vector<int> deg(n, 0);
    std::vector<Edge> edges;
    std::uniform_int_distribution<int> pick(0, n - 1);
    int attempts = 20 * edge_target + 50;
    while (edge_target > 0 && attempts-- > 0) {
        int a = pick(rng), b = pick(rng);
        if (a == b || deg[a] >= max_degree || deg[b] >= max_degree) continue;
        Edge e{std::min(a, b), std::max(a, b)};
        if (std::find(edges.begin(), edges.end(), e) != edges.end()) continue;
        edges.push_back(e);
        ++deg[a];
        ++deg[b];
        --edge_target;
    }
    return Graph(n, edges);
}

inline Graph random_bipartite(int left, int right, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int a = 0; a < left; ++a)
        for (int b = 0; b < right; ++b)
            if (coin(rng)) edges.emplace_back(a, left + b);
    return Graph(left + right, edges);
}

inline VertexSet random_subset(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
        if (coin(rng)) s.add(v);
    return s;
}

inline VertexSet random_independent_subset(const Graph& g, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    VertexSet s(g.n());
    std::vector<int> order(g.n());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (int v : order) {
        bool blocked = false;
        for (int w : g.neighbors(v)) blocked |= s.contains(w);
        if (!blocked && coin(rng)) s.add(v);
    }
    return s;
}

// (3,B2) formula: shuffle the 4n signed occurrence tokens into clauses of
// three distinct variables
inline extcover::B2SatFormula random_b2sat(int variables, std::mt19937& rng) {
    if (variables % 3 != 0)
        throw std::invalid_argument("random_b2sat: variable count must be divisible by 3");
    std::vector<int> tokens;
    for (int v = 1; v <= variables; ++v) {
        tokens.push_back(v);
        tokens.push_back(v);
        tokens.push_back(-v);
        tokens.push_back(-v);
    }
    for (int tries = 0; tries < 10000; ++tries) {
        std::shuffle(tokens.begin(), tokens.end(), rng);
        bool ok = true;
        extcover::B2SatFormula f;
        f.variables = variables;
        for (size_t i = 0; i < tokens.size() && ok; i += 3) {
            int a = tokens[i], b = tokens[i + 1], c = tokens[i + 2];
            if (std::abs(a) == std::abs(b) || std::abs(a) == std::abs(c) ||
                std::abs(b) == std::abs(c))
                ok = false;
            else
                f.clauses.push_back({a, b, c});
        }
        if (ok) return f;
    }
    throw std::runtime_error("random_b2sat: sampling failed");
}

// random subtree-intersection graph over a random bag tree; exactly the
// chordal graphs arise this way
inline Graph random_chordal(int n, std::mt19937& rng) {
    int bags = 1 + std::uniform_int_distribution<int>(2, 9)(rng);
    std::vector<Edge> tree_edges;
    for (int b = 1; b < bags; ++b)
        tree_edges.emplace_back(std::uniform_int_distribution<int>(0, b - 1)(rng), b);
    Graph bag_tree(bags, tree_edges);
    std::vector<std::vector<char>> in_subtree(n, std::vector<char>(bags, 0));
    for (int v = 0; v < n; ++v) {
        int root = std::uniform_int_distribution<int>(0, bags - 1)(rng);
        int size = 1 + std::uniform_int_distribution<int>(0, bags - 1)(rng) / 2;
        std::vector<int> frontier = {root};
        in_subtree[v][root] = 1;
        while (--size > 0 && !frontier.empty()) {
            int at = frontier[std::uniform_int_distribution<size_t>(
                0, frontier.size() - 1)(rng)];
            int next = -1;
            for (int w : bag_tree.neighbors(at))
                if (!in_subtree[v][w]) {
                    next = w;
                    break;
                }
            if (next == -1) break;
            in_subtree[v][next] = 1;
            frontier.push_back(next);
        }
    }
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int t = 0; t < bags; ++t)
                if (in_subtree[a][t] && in_subtree[b][t]) {
                    edges.emplace_back(a, b);
                    break;
                }
    return Graph(n, edges);
}

// multicolored independent set by direct product scan
inline bool naive_mcis(const Graph& g, const std::vector<VertexSet>& parts) {
    std::vector<std::vector<int>> lists;
    for (const auto& p : parts) lists.push_back(p.to_vector());
    std::vector<size_t> idx(lists.size(), 0);
    for (;;) {
        std::vector<int> chosen;
        for (size_t i = 0; i < lists.size(); ++i) chosen.push_back(lists[i][idx[i]]);
        bool independent = true;
        for (size_t a = 0; a < chosen.size() && independent; ++a)
            for (size_t b = a + 1; b < chosen.size(); ++b)
                if (g.has_edge(chosen[a], chosen[b])) {
                    independent = false;
                    break;
                }
        if (independent) return true;
        size_t i = 0;
        while (i < idx.size() && ++idx[i] == lists[i].size()) idx[i++] = 0;
        if (i == idx.size()) return false;
    }
}

}  // namespace testsupport
