#include "extcover/hcover.hpp"

#include <algorithm>

#include "extcover/errors.hpp"

namespace extcover {

namespace {

struct FamilySearch {
    const Graph& g;
    const Pattern& h;
    const VertexSet& forced;
    const std::vector<int>& order;                  // forced vertices, fail-first
    const std::vector<std::vector<VertexSet>>& cands;  // aligned with order
    std::map<int, std::vector<int>> family;

    bool pick(size_t depth, VertexSet& pool) {
        if (depth == order.size()) return true;
        for (const auto& copy : cands[depth]) {
            std::vector<int> added;
            copy.for_each([&](int v) {
                if (!forced.contains(v) && !pool.contains(v)) {
                    pool.add(v);
                    added.push_back(v);
                }
            });
            bool clean = true;
            for (int v : added)
                if (has_copy_within(g, h, pool, v)) {
                    clean = false;
                    break;
                }
            if (clean && pick(depth + 1, pool)) {
                family[order[depth]] = copy.to_vector();
                return true;
            }
            for (int v : added) pool.remove(v);
        }
        return false;
    }
};

// Extends `base` (H-free, disjoint from U) to a set that is maximal H-free
// against all additions; every forced vertex already closes a copy.
VertexSet grow_maximal_hfree(const Graph& g, const Pattern& h, const VertexSet& forced,
                             VertexSet base) {
    for (int v = 0; v < g.n(); ++v) {
        if (forced.contains(v) || base.contains(v)) continue;
        base.add(v);
        if (has_copy_within(g, h, base, v)) base.remove(v);
    }
    return base;
}

}  // namespace

HCoverDecision decide_ext_hcover(const Graph& g, const Pattern& h, const VertexSet& u,
                                 long long budget) {
    HCoverDecision out;
    std::vector<int> members = u.to_vector();
    std::vector<std::vector<VertexSet>> candidates(members.size());
    long long product = 1;
    for (size_t i = 0; i < members.size(); ++i) {
        for (const auto& copy : enumerate_copies(g, h, members[i]))
            if (copy.set_intersection(u).cardinality() == 1)
                candidates[i].push_back(copy);
        if (candidates[i].empty()) return out;  // condition (i) unsatisfiable
        if (product <= budget) product *= static_cast<long long>(candidates[i].size());
    }
    if (product > budget)
        throw BoundExceeded("decide_ext_hcover: candidate product exceeds budget " +
                            std::to_string(budget));

    // fail-first: fewest candidates first, ties by vertex id
    std::vector<size_t> perm(members.size());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](size_t a, size_t b) {
        if (candidates[a].size() != candidates[b].size())
            return candidates[a].size() < candidates[b].size();
        return members[a] < members[b];
    });
    std::vector<int> order;
    std::vector<std::vector<VertexSet>> ordered_cands;
    for (size_t i : perm) {
        order.push_back(members[i]);
        ordered_cands.push_back(std::move(candidates[i]));
    }

    FamilySearch search{g, h, u, order, ordered_cands, {}};
    VertexSet pool(g.n());
    if (!search.pick(0, pool)) return out;

    out.yes = true;
    out.witness_family = std::move(search.family);

    VertexSet hfree = grow_maximal_hfree(g, h, u, pool);
    Certificate cert;
    cert.solution = hfree.complement();
    for (const auto& [uv, copy] : out.witness_family) cert.copy_witnesses[uv] = copy;
    bool witnesses_ok = true;
    cert.solution.for_each([&](int v) {
        if (u.contains(v)) return;
        VertexSet scope = hfree;
        scope.add(v);
        auto copies = enumerate_copies(g, h, v);
        for (const auto& copy : copies)
            if (copy.is_subset_of(scope)) {
                cert.copy_witnesses[v] = copy.to_vector();
                return;
            }
        witnesses_ok = false;
    });
    if (!witnesses_ok)
        throw std::logic_error("decide_ext_hcover: failed to assemble private copies");
    out.certificate = std::move(cert);
    return out;
}

bool decide_ext_induced_hfree(const Graph& g, const Pattern& h, const VertexSet& u,
                              long long budget) {
    return decide_ext_hcover(g, h, u.complement(), budget).yes;
}

}  // namespace extcover
