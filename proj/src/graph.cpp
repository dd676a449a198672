#include "extcover/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace extcover {

VertexSet VertexSet::of(int universe, std::initializer_list<int> members) {
    VertexSet s(universe);
    for (int v : members) s.add(v);
    return s;
}

VertexSet VertexSet::from_vector(int universe, const std::vector<int>& members) {
    VertexSet s(universe);
    for (int v : members) s.add(v);
    return s;
}

VertexSet VertexSet::full(int universe) {
    VertexSet s(universe);
    for (int v = 0; v < universe; ++v) s.add(v);
    return s;
}

void VertexSet::add(int v) {
    if (v < 0 || v >= n_) throw std::out_of_range("VertexSet::add: vertex out of range");
    uint64_t& word = bits_[v >> 6];
    uint64_t mask = uint64_t{1} << (v & 63);
    if (!(word & mask)) {
        word |= mask;
        ++count_;
    }
}

void VertexSet::remove(int v) {
    if (v < 0 || v >= n_) throw std::out_of_range("VertexSet::remove: vertex out of range");
    uint64_t& word = bits_[v >> 6];
    uint64_t mask = uint64_t{1} << (v & 63);
    if (word & mask) {
        word &= ~mask;
        --count_;
    }
}

static void check_same_universe(const VertexSet& a, const VertexSet& b) {
    if (a.universe() != b.universe())
        throw std::invalid_argument("VertexSet: mismatched universes");
}

VertexSet VertexSet::set_union(const VertexSet& other) const {
    check_same_universe(*this, other);
    VertexSet r(n_);
    other.for_each([&](int v) { r.add(v); });
    for_each([&](int v) { r.add(v); });
    return r;
}

VertexSet VertexSet::set_intersection(const VertexSet& other) const {
    check_same_universe(*this, other);
    VertexSet r(n_);
    for_each([&](int v) {
        if (other.contains(v)) r.add(v);
    });
    return r;
}

VertexSet VertexSet::set_minus(const VertexSet& other) const {
    check_same_universe(*this, other);
    VertexSet r(n_);
    for_each([&](int v) {
        if (!other.contains(v)) r.add(v);
    });
    return r;
}

VertexSet VertexSet::complement() const {
    VertexSet r(n_);
    for (int v = 0; v < n_; ++v)
        if (!contains(v)) r.add(v);
    return r;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    check_same_universe(*this, other);
    for (size_t w = 0; w < bits_.size(); ++w)
        if (bits_[w] & ~other.bits_[w]) return false;
    return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
    check_same_universe(*this, other);
    for (size_t w = 0; w < bits_.size(); ++w)
        if (bits_[w] & other.bits_[w]) return true;
    return false;
}

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    out.reserve(count_);
    for_each([&](int v) { out.push_back(v); });
    return out;
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("Graph: endpoint out of range");
        if (u == v) throw std::invalid_argument("Graph: self-loop rejected");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    m_ = static_cast<int>(edges.size());

    std::vector<int> deg(n, 0);
    for (auto [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    adj_ptr_.assign(n + 1, 0);
    for (int v = 0; v < n; ++v) adj_ptr_[v + 1] = adj_ptr_[v] + deg[v];
    adj_list_.assign(adj_ptr_[n], 0);
    std::vector<int> fill(adj_ptr_.begin(), adj_ptr_.end() - 1);
    for (auto [u, v] : edges) {
        adj_list_[fill[u]++] = v;
        adj_list_[fill[v]++] = u;
    }
    for (int v = 0; v < n; ++v)
        std::sort(adj_list_.begin() + adj_ptr_[v], adj_list_.begin() + adj_ptr_[v + 1]);
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return false;
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& u) {
    VertexSet r(g.n());
    u.for_each([&](int v) {
        r.add(v);
        for (int w : g.neighbors(v)) r.add(w);
    });
    return r;
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& u) {
    VertexSet r(g.n());
    u.for_each([&](int v) {
        for (int w : g.neighbors(v))
            if (!u.contains(w)) r.add(w);
    });
    return r;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& w) {
    InducedSubgraph out;
    out.to_original = w.to_vector();
    std::vector<int> to_new(g.n(), -1);
    for (size_t i = 0; i < out.to_original.size(); ++i)
        to_new[out.to_original[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (int old_u : out.to_original)
        for (int old_v : g.neighbors(old_u))
            if (old_u < old_v && to_new[old_v] >= 0)
                edges.emplace_back(to_new[old_u], to_new[old_v]);
    out.graph = Graph(static_cast<int>(out.to_original.size()), std::move(edges));
    return out;
}

Classification classify(const Graph& g) {
    Classification out;
    out.max_degree = g.max_degree();
    out.is_forest = true;
    bool bipartite = true;
    std::vector<int> color(g.n(), -1);
    VertexSet side_a(g.n()), side_b(g.n());
    for (int root = 0; root < g.n(); ++root) {
        if (color[root] != -1) continue;
        VertexSet comp(g.n());
        color[root] = 0;
        std::deque<int> queue = {root};
        int comp_vertices = 0, comp_edge_ends = 0;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            comp.add(v);
            ++comp_vertices;
            comp_edge_ends += g.degree(v);
            (color[v] == 0 ? side_a : side_b).add(v);
            for (int u : g.neighbors(v)) {
                if (color[u] == -1) {
                    color[u] = 1 - color[v];
                    queue.push_back(u);
                } else if (color[u] == color[v]) {
                    bipartite = false;
                }
            }
        }
        if (comp_edge_ends / 2 != comp_vertices - 1) out.is_forest = false;
        out.components.push_back(std::move(comp));
    }
    if (bipartite) out.bipartition = std::make_pair(std::move(side_a), std::move(side_b));
    return out;
}

std::vector<int> greedy_coloring(const Graph& g, const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != g.n())
        throw std::invalid_argument("greedy_coloring: order is not a permutation");
    std::vector<char> seen(g.n(), 0);
    for (int v : order) {
        if (v < 0 || v >= g.n() || seen[v])
            throw std::invalid_argument("greedy_coloring: order is not a permutation");
        seen[v] = 1;
    }
    std::vector<int> color(g.n(), -1);
    std::vector<char> used(g.n() + 1, 0);
    for (int v : order) {
        for (int u : g.neighbors(v))
            if (color[u] >= 0) used[color[u]] = 1;
        int c = 0;
        while (used[c]) ++c;
        color[v] = c;
        for (int u : g.neighbors(v))
            if (color[u] >= 0) used[color[u]] = 0;
    }
    return color;
}

Graph parse_dimacs(std::istream& in) {
    std::string line;
    int n = -1;
    long declared_m = -1;
    std::vector<Edge> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            if (n >= 0) throw FormatError("dimacs: duplicate p-line at line " + std::to_string(lineno));
            std::string kind;
            if (!(ls >> kind >> n >> declared_m) || (kind != "edge" && kind != "col") || n < 0)
                throw FormatError("dimacs: malformed p-line at line " + std::to_string(lineno));
        } else if (tag == "e") {
            if (n < 0) throw FormatError("dimacs: e-line before p-line at line " + std::to_string(lineno));
            int u, v;
            if (!(ls >> u >> v))
                throw FormatError("dimacs: malformed e-line at line " + std::to_string(lineno));
            if (u < 1 || u > n || v < 1 || v > n)
                throw FormatError("dimacs: vertex id out of range at line " + std::to_string(lineno));
            if (u == v)
                throw FormatError("dimacs: self-loop at line " + std::to_string(lineno));
            edges.emplace_back(u - 1, v - 1);
        } else {
            throw FormatError("dimacs: unknown line tag '" + tag + "' at line " + std::to_string(lineno));
        }
    }
    if (n < 0) throw FormatError("dimacs: missing p-line");
    return Graph(n, std::move(edges));
}

Graph parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs(in);
}

void write_dimacs(std::ostream& out, const Graph& g, const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "c " << c << "\n";
    out << "p edge " << g.n() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
}

std::string write_dimacs(const Graph& g, const std::vector<std::string>& comments) {
    std::ostringstream out;
    write_dimacs(out, g, comments);
    return out.str();
}

VertexSet parse_vertex_list(std::istream& in, int n) {
    VertexSet s(n);
    int v;
    while (in >> v) {
        if (v < 1 || v > n) throw FormatError("vertex list: id out of range");
        s.add(v - 1);
    }
    return s;
}

void write_vertex_list(std::ostream& out, const VertexSet& s) {
    s.for_each([&](int v) { out << v + 1 << "\n"; });
}

}  // namespace extcover
