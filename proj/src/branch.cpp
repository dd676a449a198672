#include "extcover/branch.hpp"

#include <algorithm>
#include <cassert>

namespace extcover {

Certificate complete_to_certificate(const Graph& g, const VertexSet& u,
                                    const VertexSet& r) {
    std::vector<int> order(g.n());
    for (int v = 0; v < g.n(); ++v) order[v] = v;
    return complete_to_certificate(g, u, r, order);
}

Certificate complete_to_certificate(const Graph& g, const VertexSet& u,
                                    const VertexSet& r, const std::vector<int>& order) {
    if (u.universe() != g.n() || r.universe() != g.n())
        throw std::invalid_argument("complete_to_certificate: universe mismatch");
    if (static_cast<int>(order.size()) != g.n())
        throw std::invalid_argument("complete_to_certificate: bad greedy order");
    if (r.intersects(u))
        throw std::invalid_argument("complete_to_certificate: r intersects U");
    VertexSet closed_u = closed_neighborhood(g, u);
    bool ok = true;
    r.for_each([&](int x) {
        if (!closed_u.contains(x)) ok = false;
        for (int w : g.neighbors(x)) ok &= !r.contains(w);
    });
    if (!ok)
        throw std::invalid_argument(
            "complete_to_certificate: r must be an independent subset of N[U]\\U");
    VertexSet dominated = closed_neighborhood(g, r);
    bool dominates = true;
    u.for_each([&](int v) { dominates &= dominated.contains(v); });
    if (!dominates)
        throw std::invalid_argument("complete_to_certificate: r does not dominate U");

    // Greedy maximal extension of r outside N[r].
    VertexSet independent = r;
    VertexSet blocked = dominated;  // N[r], then grows with each pick
    for (int v : order) {
        if (blocked.contains(v)) continue;
        independent.add(v);
        blocked.add(v);
        for (int w : g.neighbors(v)) blocked.add(w);
    }

    Certificate cert;
    cert.solution = independent.complement();
    cert.solution.for_each([&](int v) {
        for (int w : g.neighbors(v))
            if (independent.contains(w)) {
                cert.edge_witnesses[v] = {v, w};
                break;
            }
    });
    return cert;
}

namespace {

long long saturating_pow(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > (1LL << 62) / std::max<long long>(base, 1)) return 1LL << 62;
        r *= base;
    }
    return r;
}

// Recursion with mark-and-undo on the original graph; deleting N[x] and
// recursing is the same as recursing on the induced subgraph.
struct FptSearch {
    const Graph& g;
    std::vector<char> alive, in_u;
    int u_count = 0;
    BranchStats stats;
    std::vector<int> donors;  // accepting path only

    bool first_branch_ = true;

    void note_branch_u_removed(int count) {
        if (first_branch_) {
            stats.branch_u_removed_min = stats.branch_u_removed_max = count;
            first_branch_ = false;
        } else {
            stats.branch_u_removed_min = std::min(stats.branch_u_removed_min, count);
            stats.branch_u_removed_max = std::max(stats.branch_u_removed_max, count);
        }
    }

    explicit FptSearch(const ExtInstance& inst) : g(inst.graph) {
        alive.assign(g.n(), 1);
        in_u.assign(g.n(), 0);
        inst.forced.for_each([&](int v) { in_u[v] = 1; });
        u_count = inst.forced.cardinality();
    }

    bool recurse(int depth) {
        stats.max_depth = std::max(stats.max_depth, depth);
        if (u_count == 0) {
            ++stats.nodes_expanded;
            return true;
        }
        int pick = -1;
        for (int v = 0; v < g.n() && pick < 0; ++v)
            if (alive[v] && in_u[v]) pick = v;
        bool any_candidate = false;
        for (int x : g.neighbors(pick)) {
            if (!alive[x] || in_u[x]) continue;
            any_candidate = true;
            int removed_u = 0;
            std::vector<int> removed;
            auto kill = [&](int v) {
                alive[v] = 0;
                removed.push_back(v);
                if (in_u[v]) ++removed_u;
            };
            kill(x);
            for (int w : g.neighbors(x))
                if (alive[w]) kill(w);
            u_count -= removed_u;
            note_branch_u_removed(removed_u);
            bool yes = recurse(depth + 1);
            u_count += removed_u;
            for (int v : removed) alive[v] = 1;
            if (yes) {
                donors.push_back(x);
                return true;
            }
        }
        if (!any_candidate) ++stats.nodes_expanded;
        return false;
    }
};

struct ExactSearch {
    BranchStats stats;
    bool first_branch_ = true;

    void note_branch_u_removed(int count) {
        if (first_branch_) {
            stats.branch_u_removed_min = stats.branch_u_removed_max = count;
            first_branch_ = false;
        } else {
            stats.branch_u_removed_min = std::min(stats.branch_u_removed_min, count);
            stats.branch_u_removed_max = std::max(stats.branch_u_removed_max, count);
        }
    }

    bool recurse(const Graph& g, const VertexSet& u, int depth,
                 std::vector<int>& donors) {
        stats.max_depth = std::max(stats.max_depth, depth);
        auto red = apply_rules(ExtInstance::ext_vc(g, u));
        for (const auto& s : red.trace.steps) ++stats.rule_firings[s.rule];
        if (red.verdict.has_value()) {
            ++stats.nodes_expanded;
            if (*red.verdict)
                for (int d : red.donors) donors.push_back(d);
            return *red.verdict;
        }
        for (int d : red.donors) donors.push_back(d);
        const Graph& rg = red.reduced.graph;
        const VertexSet& ru = red.reduced.forced;

        auto comps = classify(rg).components;
        if (comps.size() > 1) {
            for (const auto& comp : comps) {
                auto sub = induced_subgraph(rg, comp);
                VertexSet cu(sub.graph.n());
                for (size_t i = 0; i < sub.to_original.size(); ++i)
                    if (ru.contains(sub.to_original[i])) cu.add(static_cast<int>(i));
                std::vector<int> comp_donors;
                if (!recurse(sub.graph, cu, depth, comp_donors)) return false;
                for (int d : comp_donors)
                    donors.push_back(red.to_original[sub.to_original[d]]);
            }
            return true;
        }

        // single component, rules at fixpoint: minimum-degree branching
        int v = -1;
        for (int w = 0; w < rg.n(); ++w)
            if (v == -1 || rg.degree(w) < rg.degree(v)) v = w;
        assert(v >= 0);

        std::vector<int> excluded_choices;
        if (ru.contains(v)) {
            for (int x : rg.neighbors(v))
                if (!ru.contains(x)) excluded_choices.push_back(x);
        } else {
            excluded_choices.push_back(v);
            for (int x : rg.neighbors(v))
                if (!ru.contains(x)) excluded_choices.push_back(x);
            std::sort(excluded_choices.begin(), excluded_choices.end());
        }
        if (excluded_choices.empty()) {
            ++stats.nodes_expanded;
            return false;
        }
        for (int w : excluded_choices) {
            VertexSet keep = VertexSet::full(rg.n());
            keep.remove(w);
            for (int x : rg.neighbors(w)) keep.remove(x);
            auto sub = induced_subgraph(rg, keep);
            VertexSet child_u(sub.graph.n());
            for (size_t i = 0; i < sub.to_original.size(); ++i)
                if (ru.contains(sub.to_original[i])) child_u.add(static_cast<int>(i));
            note_branch_u_removed(ru.cardinality() - child_u.cardinality());
            std::vector<int> child_donors;
            if (recurse(sub.graph, child_u, depth + 1, child_donors)) {
                donors.push_back(red.to_original[w]);
                for (int d : child_donors)
                    donors.push_back(red.to_original[sub.to_original[d]]);
                return true;
            }
        }
        return false;
    }
};

SolveResult finish(const ExtInstance& inst, bool yes, std::vector<int> donors,
                   BranchStats stats) {
    SolveResult out;
    out.yes = yes;
    out.stats = std::move(stats);
    if (yes) {
        VertexSet r(inst.graph.n());
        for (int d : donors) r.add(d);
        out.certificate = complete_to_certificate(inst.graph, inst.forced, r);
    }
    return out;
}

}  // namespace

SolveResult solve_fpt(const ExtInstance& inst) {
    if (inst.kind != ProblemKind::ExtVC)
        throw std::invalid_argument("solve_fpt: expected an Ext VC instance");
    FptSearch search(inst);
    bool yes = search.recurse(0);
    long long budget =
        saturating_pow(inst.graph.max_degree(), inst.forced.cardinality()) + 1;
    if (search.stats.nodes_expanded > budget)
        throw std::logic_error("solve_fpt: node budget max_degree^|U|+1 exceeded");
    return finish(inst, yes, std::move(search.donors), std::move(search.stats));
}

SolveResult solve_exact(const ExtInstance& inst) {
    if (inst.kind != ProblemKind::ExtVC)
        throw std::invalid_argument("solve_exact: expected an Ext VC instance");
    ExactSearch search;
    std::vector<int> donors;
    bool yes = search.recurse(inst.graph, inst.forced, 0, donors);
    return finish(inst, yes, std::move(donors), std::move(search.stats));
}

}  // namespace extcover
