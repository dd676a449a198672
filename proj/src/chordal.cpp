#include "extcover/chordal.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace extcover {

std::vector<int> lex_bfs(const Graph& g) {
    const int n = g.n();
    std::vector<int> seq(n), pos(n), cell_of(n);
    for (int v = 0; v < n; ++v) seq[v] = v, pos[v] = v;

    struct Cell {
        int begin, end;  // [begin, end) within seq
    };
    std::vector<Cell> cells;
    if (n > 0) cells.push_back({0, n});
    std::fill(cell_of.begin(), cell_of.end(), 0);

    std::vector<int> order;
    order.reserve(n);
    std::vector<char> visited(n, 0);
    std::vector<int> marked;          // cells touched during refinement
    std::vector<int> mark_count(1, 0);

    for (int i = 0; i < n; ++i) {
        // drop exhausted leading cells
        int c = cell_of[seq[i]];
        int v = seq[i];
        visited[v] = 1;
        order.push_back(v);
        cells[c].begin = i + 1;

        marked.clear();
        for (int u : g.neighbors(v)) {
            if (visited[u]) continue;
            int cu = cell_of[u];
            if (mark_count[cu] == 0) marked.push_back(cu);
            // swap u into the marked prefix of its cell
            int target = cells[cu].begin + mark_count[cu];
            int w = seq[target];
            std::swap(seq[pos[u]], seq[target]);
            pos[w] = pos[u];
            pos[u] = target;
            ++mark_count[cu];
        }
        for (int cu : marked) {
            int cnt = mark_count[cu];
            mark_count[cu] = 0;
            if (cnt == cells[cu].end - cells[cu].begin) continue;  // whole cell moved
            // split: marked prefix becomes its own earlier cell
            int nb = cells[cu].begin, ne = cells[cu].begin + cnt;
            cells[cu].begin = ne;
            cells.push_back({nb, ne});
            mark_count.push_back(0);
            int fresh = static_cast<int>(cells.size()) - 1;
            for (int p = nb; p < ne; ++p) cell_of[seq[p]] = fresh;
        }
    }
    return order;
}

bool verify_peo(const Graph& g, const std::vector<int>& order) {
    const int n = g.n();
    if (static_cast<int>(order.size()) != n) return false;
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        if (v < 0 || v >= n || pos[v] != -1) return false;
        pos[v] = i;
    }
    // Deferred clique checks (Golumbic): for each v, the later neighbors
    // minus the earliest one must turn out adjacent to that earliest one.
    std::vector<std::vector<int>> pending(n);
    std::vector<char> mark(n, 0);
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        for (int u : g.neighbors(v)) mark[u] = 1;
        for (int a : pending[v])
            if (!mark[a]) {
                for (int u : g.neighbors(v)) mark[u] = 0;
                return false;
            }
        for (int u : g.neighbors(v)) mark[u] = 0;

        int w = -1;
        for (int u : g.neighbors(v))
            if (pos[u] > i && (w == -1 || pos[u] < pos[w])) w = u;
        if (w == -1) continue;
        for (int u : g.neighbors(v))
            if (pos[u] > i && u != w) pending[w].push_back(u);
    }
    return true;
}

std::optional<std::vector<int>> chordal_peo(const Graph& g) {
    std::vector<int> order = lex_bfs(g);
    std::reverse(order.begin(), order.end());
    if (verify_peo(g, order)) return order;
    return std::nullopt;
}

Graph random_interval_graph(int n, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double scale = n > 0 ? 2.0 / std::sqrt(static_cast<double>(n)) : 1.0;
    std::vector<std::pair<double, double>> iv(n);
    for (int i = 0; i < n; ++i) {
        double a = unit(rng);
        double len = unit(rng) * scale;
        iv[i] = {a, a + len};
    }
    std::vector<Edge> edges;
    std::vector<int> by_left(n);
    for (int i = 0; i < n; ++i) by_left[i] = i;
    std::sort(by_left.begin(), by_left.end(),
              [&](int a, int b) { return iv[a].first < iv[b].first; });
    for (int a = 0; a < n; ++a) {
        int i = by_left[a];
        for (int b = a + 1; b < n; ++b) {
            int j = by_left[b];
            if (iv[j].first > iv[i].second) break;
            edges.emplace_back(i, j);
        }
    }
    return Graph(n, std::move(edges));
}

}  // namespace extcover
