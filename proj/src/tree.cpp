#include "extcover/tree.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "extcover/errors.hpp"

namespace extcover {

ForestDecision decide_forest(const ExtInstance& inst) {
    if (inst.kind != ProblemKind::ExtVC)
        throw std::invalid_argument("decide_forest: expected an Ext VC instance");
    if (!classify(inst.graph).is_forest)
        throw Unsupported("decide_forest: input graph is not a forest");
    auto res = apply_rules(inst);
    if (!res.verdict.has_value())
        throw std::logic_error("decide_forest: rule engine stalled on a forest");
    ForestDecision out;
    out.yes = *res.verdict;
    if (out.yes) {
        VertexSet r(inst.graph.n());
        for (int d : res.donors) r.add(d);
        out.certificate = complete_to_certificate(inst.graph, inst.forced, r);
    }
    return out;
}

static void require_tree(const Graph& g, const char* op) {
    if (g.n() == 0) throw std::invalid_argument(std::string(op) + ": empty graph");
    auto c = classify(g);
    if (!c.is_forest || c.components.size() != 1)
        throw std::invalid_argument(std::string(op) + ": input is not a tree");
}

bool is_in_T(const ColoredTree& ct) {
    const Graph& g = ct.tree;
    require_tree(g, "is_in_T");
    const int n = g.n();
    if (n == 1) return ct.black.contains(0);
    if (n % 3 != 1) return false;

    std::vector<char> alive(n, 1);
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    auto other_neighbor = [&](int v, int avoid) {
        for (int w : g.neighbors(v))
            if (alive[w] && w != avoid) return w;
        return -1;
    };
    auto sole_neighbor = [&](int v) { return other_neighbor(v, -1); };

    std::deque<int> black_leaves;
    for (int v = 0; v < n; ++v)
        if (ct.black.contains(v) && deg[v] == 1) black_leaves.push_back(v);

    int alive_count = n;
    while (alive_count > 1) {
        // every black leaf of a member is peelable, so one failed probe
        // already decides rejection
        int b = -1;
        while (!black_leaves.empty()) {
            int cand = black_leaves.front();
            black_leaves.pop_front();
            if (alive[cand] && deg[cand] == 1) {
                b = cand;
                break;
            }
        }
        if (b == -1) return false;
        int w2 = sole_neighbor(b);
        if (w2 == -1 || ct.black.contains(w2) || deg[w2] != 2) return false;
        int w1 = other_neighbor(w2, b);
        if (w1 == -1 || ct.black.contains(w1) || deg[w1] != 2) return false;
        int t = other_neighbor(w1, w2);
        if (t == -1 || !ct.black.contains(t)) return false;
        alive[b] = alive[w2] = alive[w1] = 0;
        alive_count -= 3;
        --deg[t];
        if (deg[t] == 1 && ct.black.contains(t)) black_leaves.push_back(t);
    }
    int last = -1;
    for (int v = 0; v < n; ++v)
        if (alive[v]) last = v;
    return last >= 0 && ct.black.contains(last);
}

std::optional<VertexSet> find_forbidden_subtree(const Graph& t, const VertexSet& u,
                                                int bound) {
    require_tree(t, "find_forbidden_subtree");
    if (t.n() > bound)
        throw BoundExceeded("find_forbidden_subtree: tree larger than bound " +
                            std::to_string(bound));
    bool independent = true;
    u.for_each([&](int v) {
        for (int w : t.neighbors(v)) independent &= !u.contains(w);
    });
    if (!independent)
        throw Unsupported("find_forbidden_subtree: forced set must be independent");

    // Every white of a member has exactly one black neighbor, so any
    // qualifying subtree is B together with N(B) for its black set B.
    std::vector<int> members = u.to_vector();
    const size_t k = members.size();
    for (uint64_t mask = 1; mask < (uint64_t{1} << k); ++mask) {
        VertexSet blacks(t.n());
        for (size_t i = 0; i < k; ++i)
            if (mask >> i & 1) blacks.add(members[i]);
        VertexSet verts = closed_neighborhood(t, blacks);
        auto sub = induced_subgraph(t, verts);
        auto cls = classify(sub.graph);
        if (cls.components.size() != 1) continue;
        VertexSet sub_black(sub.graph.n());
        for (size_t i = 0; i < sub.to_original.size(); ++i)
            if (blacks.contains(sub.to_original[i])) sub_black.add(static_cast<int>(i));
        if (is_in_T(ColoredTree{sub.graph, sub_black})) return verts;
    }
    return std::nullopt;
}

ColoredTree parse_colored_tree(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<Edge> edges;
    std::vector<int> black_raw;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            std::string kind;
            long m;
            if (!(ls >> kind >> n >> m) || kind != "edge" || n < 0)
                throw FormatError("colored tree: malformed p-line");
        } else if (tag == "e") {
            int a, b;
            if (!(ls >> a >> b) || n < 0 || a < 1 || a > n || b < 1 || b > n || a == b)
                throw FormatError("colored tree: malformed e-line");
            edges.emplace_back(a - 1, b - 1);
        } else if (tag == "b") {
            int v;
            while (ls >> v) {
                if (n < 0 || v < 1 || v > n)
                    throw FormatError("colored tree: black vertex out of range");
                black_raw.push_back(v - 1);
            }
        } else {
            throw FormatError("colored tree: unknown line tag '" + tag + "'");
        }
    }
    if (n < 0) throw FormatError("colored tree: missing p-line");
    ColoredTree ct{Graph(n, std::move(edges)), VertexSet::from_vector(n, black_raw)};
    return ct;
}

void write_colored_tree(std::ostream& out, const ColoredTree& ct) {
    write_dimacs(out, ct.tree);
    out << "b";
    ct.black.for_each([&](int v) { out << " " << v + 1; });
    out << "\n";
}

}  // namespace extcover
