#include "extcover/oracle.hpp"

#include <algorithm>
#include <string>

namespace extcover {

static void check_bound(const Graph& g, int bound, const char* op) {
    if (g.n() > bound)
        throw BoundExceeded(std::string(op) + ": instance has " + std::to_string(g.n()) +
                            " vertices, oracle bound is " + std::to_string(bound));
}

namespace {

struct MisEnumerator {
    const Graph& g;
    const std::function<bool(const VertexSet&)>& emit;
    std::vector<int> chosen;
    bool stopped = false;

    bool independent_with_chosen(int v) const {
        for (int u : chosen)
            if (g.has_edge(u, v)) return false;
        return true;
    }

    void recurse(int v) {
        if (stopped) return;
        if (v == g.n()) {
            VertexSet s = VertexSet::from_vector(g.n(), chosen);
            if (is_maximal_independent_set(g, s)) stopped = emit(s);
            return;
        }
        if (independent_with_chosen(v)) {
            chosen.push_back(v);
            recurse(v + 1);
            chosen.pop_back();
        }
        recurse(v + 1);
    }
};

Certificate cover_certificate_from_mis(const Graph& g, const VertexSet& mis) {
    Certificate cert;
    cert.solution = mis.complement();
    cert.solution.for_each([&](int v) {
        for (int u : g.neighbors(v))
            if (mis.contains(u)) {
                cert.edge_witnesses[v] = {v, u};
                break;
            }
    });
    return cert;
}

}  // namespace

void enumerate_maximal_is(const Graph& g,
                          const std::function<bool(const VertexSet&)>& emit, int bound) {
    check_bound(g, bound, "enumerate_maximal_is");
    MisEnumerator e{g, emit, {}, false};
    e.recurse(0);
}

std::vector<VertexSet> maximal_independent_sets(const Graph& g, int bound) {
    std::vector<VertexSet> out;
    enumerate_maximal_is(
        g,
        [&](const VertexSet& s) {
            out.push_back(s);
            return false;
        },
        bound);
    return out;
}

Decision decide_ext_vc_bf(const ExtInstance& inst, int bound) {
    if (inst.kind != ProblemKind::ExtVC)
        throw std::invalid_argument("decide_ext_vc_bf: expected an Ext VC instance");
    check_bound(inst.graph, bound, "decide_ext_vc_bf");
    Decision out;
    enumerate_maximal_is(
        inst.graph,
        [&](const VertexSet& s) {
            if (!s.intersects(inst.forced)) {
                out.yes = true;
                out.certificate = cover_certificate_from_mis(inst.graph, s);
                return true;
            }
            return false;
        },
        bound);
    return out;
}

Decision decide_ext_is_bf(const ExtInstance& inst, int bound) {
    if (inst.kind != ProblemKind::ExtIS)
        throw std::invalid_argument("decide_ext_is_bf: expected an Ext IS instance");
    check_bound(inst.graph, bound, "decide_ext_is_bf");
    Decision out;
    enumerate_maximal_is(
        inst.graph,
        [&](const VertexSet& s) {
            if (s.is_subset_of(inst.forced)) {
                out.yes = true;
                Certificate cert;
                cert.solution = s;
                out.certificate = std::move(cert);
                return true;
            }
            return false;
        },
        bound);
    return out;
}

OptValue max_ext_vc_opt_bf(const Graph& g, const VertexSet& u, int bound) {
    check_bound(g, bound, "max_ext_vc_opt_bf");
    OptValue best{-1, VertexSet(g.n())};
    enumerate_maximal_is(
        g,
        [&](const VertexSet& s) {
            int value = u.cardinality() - s.set_intersection(u).cardinality();
            if (value > best.value) best = {value, s.complement()};
            return false;
        },
        bound);
    if (best.value < 0) best.value = 0;  // n == 0: the empty cover
    return best;
}

long long min_wisds_bf(const Graph& g, const std::vector<long long>& weights, int bound) {
    check_bound(g, bound, "min_wisds_bf");
    if (static_cast<int>(weights.size()) != g.n())
        throw std::invalid_argument("min_wisds_bf: weight vector length mismatch");
    for (long long x : weights)
        if (x < 0) throw std::invalid_argument("min_wisds_bf: negative weight");
    long long best = -1;
    enumerate_maximal_is(
        g,
        [&](const VertexSet& s) {
            long long w = 0;
            s.for_each([&](int v) { w += weights[v]; });
            if (best < 0 || w < best) best = w;
            return false;
        },
        bound);
    if (best < 0) {
        if (g.n() == 0) return 0;
        throw std::logic_error("min_wisds_bf: no maximal independent set found");
    }
    return best;
}

bool decide_ext_hcover_bf(const Graph& g, const Pattern& h, const VertexSet& u, int bound) {
    check_bound(g, bound, "decide_ext_hcover_bf");
    std::vector<int> free_vertices;
    for (int v = 0; v < g.n(); ++v)
        if (!u.contains(v)) free_vertices.push_back(v);
    const size_t k = free_vertices.size();
    for (uint64_t mask = 0; mask < (uint64_t{1} << k); ++mask) {
        VertexSet s = u;
        for (size_t i = 0; i < k; ++i)
            if (mask >> i & 1) s.add(free_vertices[i]);
        if (is_minimal_h_cover(g, h, s)) return true;
    }
    return false;
}

int independence_number_bf(const Graph& g, int bound) {
    check_bound(g, bound, "independence_number_bf");
    int best = 0;
    enumerate_maximal_is(
        g,
        [&](const VertexSet& s) {
            best = std::max(best, s.cardinality());
            return false;
        },
        bound);
    return best;
}

}  // namespace extcover
