#include "extcover/chordal_solver.hpp"

#include <algorithm>
#include <cassert>

#include "extcover/errors.hpp"

#include <istream>
#include <ostream>

namespace extcover {

std::vector<long long> parse_weights(std::istream& in, int n) {
    std::vector<long long> w;
    long long x;
    while (in >> x) {
        if (x < 0) throw FormatError("weight file: negative weight");
        w.push_back(x);
    }
    if (static_cast<int>(w.size()) != n)
        throw FormatError("weight file: expected " + std::to_string(n) + " weights, got " +
                          std::to_string(w.size()));
    return w;
}

void write_weights(std::ostream& out, const std::vector<long long>& weights) {
    for (long long x : weights) out << x << "\n";
}

namespace {

using Mask = std::vector<uint64_t>;

Mask make_mask(int bits) { return Mask((bits + 63) / 64, 0); }
void mask_set(Mask& m, int i) { m[i >> 6] |= uint64_t{1} << (i & 63); }
bool mask_test(const Mask& m, int i) { return m[i >> 6] >> (i & 63) & 1; }
void mask_or(Mask& m, const Mask& o) {
    for (size_t i = 0; i < m.size(); ++i) m[i] |= o[i];
}
bool mask_subset(const Mask& a, const Mask& b) {  // a ⊆ b
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

struct State {
    int occupier = -1;       // vertex id in madj(v), or -1
    Mask undominated;        // positions within madj(v); empty when occupied
    long long cost = 0;
    bool take_v = false;
    std::vector<int> child_choice;  // index into each child's frontier
};

struct BagDp {
    const Graph& g;
    const std::vector<long long>& w;
    std::vector<int> pos;                    // vertex -> PEO position
    std::vector<std::vector<int>> madj;      // later neighbors, by position
    std::vector<std::vector<int>> children;  // elimination-forest children
    std::vector<std::vector<State>> frontier;

    explicit BagDp(const Graph& graph, const std::vector<long long>& weights,
                   const std::vector<int>& peo)
        : g(graph), w(weights) {
        const int n = g.n();
        pos.assign(n, 0);
        for (int i = 0; i < n; ++i) pos[peo[i]] = i;
        madj.assign(n, {});
        children.assign(n, {});
        for (int v = 0; v < n; ++v) {
            for (int u : g.neighbors(v))
                if (pos[u] > pos[v]) madj[v].push_back(u);
            std::sort(madj[v].begin(), madj[v].end(),
                      [&](int a, int b) { return pos[a] < pos[b]; });
        }
        for (int v = 0; v < n; ++v)
            if (!madj[v].empty()) children[madj[v][0]].push_back(v);
        frontier.assign(n, {});
    }

    // index of vertex x within bag {v} ∪ madj(v): 0 for v, 1 + rank in madj
    int bag_index(int v, int x) const {
        if (x == v) return 0;
        for (size_t i = 0; i < madj[v].size(); ++i)
            if (madj[v][i] == x) return static_cast<int>(i) + 1;
        return -1;
    }

    void insert_pruned(std::vector<State>& fr, State&& s) {
        for (const auto& t : fr) {
            if (t.occupier != s.occupier) continue;
            if (t.cost <= s.cost && mask_subset(t.undominated, s.undominated)) return;
        }
        std::erase_if(fr, [&](const State& t) {
            return t.occupier == s.occupier && s.cost <= t.cost &&
                   mask_subset(s.undominated, t.undominated);
        });
        fr.push_back(std::move(s));
    }

    // cheapest child state with the required occupier, or -1
    int best_child_state(int child, int required) const {
        int best = -1;
        for (size_t i = 0; i < frontier[child].size(); ++i) {
            const auto& st = frontier[child][i];
            if (st.occupier != required) continue;
            if (best == -1 || st.cost < frontier[child][best].cost)
                best = static_cast<int>(i);
        }
        return best;
    }

    void process(int v) {
        const auto& kids = children[v];
        const int sep_size = static_cast<int>(madj[v].size());
        const int bag_bits = sep_size + 1;
        std::vector<State> fr;

        // occupied bags: o = v itself or a separator vertex
        std::vector<int> occupier_options = {v};
        for (int s : madj[v]) occupier_options.push_back(s);
        for (int o : occupier_options) {
            State st;
            st.cost = (o == v) ? w[v] : 0;
            st.take_v = (o == v);
            st.occupier = (o == v) ? -1 : o;
            st.undominated = make_mask(sep_size);
            bool feasible = true;
            for (int c : kids) {
                // sol ∩ madj(c) is forced to o when o lies in the child
                // separator (o == v always does), and empty otherwise
                bool in_sep = o == v || std::find(madj[c].begin(), madj[c].end(), o) !=
                                            madj[c].end();
                int required = in_sep ? o : -1;
                int idx = best_child_state(c, required);
                if (idx < 0) {
                    feasible = false;
                    break;
                }
                st.cost += frontier[c][idx].cost;
                st.child_choice.push_back(idx);
            }
            if (feasible) insert_pruned(fr, std::move(st));
        }

        // unoccupied bag: combine children coverage, v must be dominated
        struct Partial {
            Mask covered;  // over bag positions of v
            long long cost;
            std::vector<int> choice;
        };
        std::vector<Partial> partials = {{make_mask(bag_bits), 0, {}}};
        bool open_feasible = true;
        for (int c : kids) {
            // child coverage options translated into this bag's positions
            std::vector<std::pair<Mask, int>> options;
            for (size_t i = 0; i < frontier[c].size(); ++i) {
                const auto& st = frontier[c][i];
                if (st.occupier != -1) continue;
                Mask cov = make_mask(bag_bits);
                for (size_t j = 0; j < madj[c].size(); ++j) {
                    if (mask_test(st.undominated, static_cast<int>(j))) continue;
                    int bi = bag_index(v, madj[c][j]);
                    if (bi >= 0) mask_set(cov, bi);
                }
                options.emplace_back(std::move(cov), static_cast<int>(i));
            }
            if (options.empty()) {
                open_feasible = false;
                break;
            }
            std::vector<Partial> next;
            for (const auto& p : partials)
                for (const auto& [cov, idx] : options) {
                    Partial q{p.covered, p.cost + frontier[c][idx].cost, p.choice};
                    mask_or(q.covered, cov);
                    q.choice.push_back(idx);
                    next.push_back(std::move(q));
                }
            // dominance pruning: keep cheapest per maximal coverage
            std::sort(next.begin(), next.end(),
                      [](const Partial& a, const Partial& b) { return a.cost < b.cost; });
            partials.clear();
            for (auto& q : next) {
                bool dominated = false;
                for (const auto& kept : partials)
                    if (mask_subset(q.covered, kept.covered)) {
                        dominated = true;
                        break;
                    }
                if (!dominated) partials.push_back(std::move(q));
            }
        }
        if (open_feasible) {
            for (auto& p : partials) {
                if (!mask_test(p.covered, 0)) continue;  // v undominated
                State st;
                st.occupier = -1;
                st.take_v = false;
                st.cost = p.cost;
                st.child_choice = p.choice;
                st.undominated = make_mask(sep_size);
                for (int j = 0; j < sep_size; ++j)
                    if (!mask_test(p.covered, j + 1)) mask_set(st.undominated, j);
                insert_pruned(fr, std::move(st));
            }
        }
        frontier[v] = std::move(fr);
    }

    void recover(int v, int state_idx, VertexSet& sol) const {
        const State& st = frontier[v][state_idx];
        if (st.take_v) sol.add(v);
        for (size_t j = 0; j < children[v].size(); ++j)
            recover(children[v][j], st.child_choice[j], sol);
    }
};

}  // namespace

WmisdsResult wmisds_chordal(const WeightedGraph& wg, const std::vector<int>& peo) {
    const Graph& g = wg.graph;
    if (static_cast<int>(wg.weights.size()) != g.n())
        throw std::invalid_argument("wmisds_chordal: weight vector length mismatch");
    for (long long x : wg.weights)
        if (x < 0) throw std::invalid_argument("wmisds_chordal: negative weight");
    if (!verify_peo(g, peo))
        throw std::invalid_argument("wmisds_chordal: not a perfect elimination ordering");

    BagDp dp(g, wg.weights, peo);
    for (int i = 0; i < g.n(); ++i) dp.process(peo[i]);

    WmisdsResult out;
    out.solution = VertexSet(g.n());
    for (int v = 0; v < g.n(); ++v) {
        if (!dp.madj[v].empty()) continue;  // not an elimination-forest root
        int best = -1;
        for (size_t i = 0; i < dp.frontier[v].size(); ++i)
            if (best == -1 || dp.frontier[v][i].cost < dp.frontier[v][best].cost)
                best = static_cast<int>(i);
        if (best == -1)
            throw std::logic_error("wmisds_chordal: no feasible state at a root");
        out.value += dp.frontier[v][best].cost;
        dp.recover(v, best, out.solution);
    }
    return out;
}

ChordalDecision decide_ext_vc_chordal(const ExtInstance& inst) {
    if (inst.kind != ProblemKind::ExtVC)
        throw std::invalid_argument("decide_ext_vc_chordal: expected an Ext VC instance");
    const Graph& g = inst.graph;
    if (!chordal_peo(g))
        throw Unsupported("decide_ext_vc_chordal: input graph is not chordal");

    auto sub = induced_subgraph(g, closed_neighborhood(g, inst.forced));
    auto peo = chordal_peo(sub.graph);
    assert(peo);
    WeightedGraph wg{sub.graph, std::vector<long long>(sub.graph.n(), 0)};
    for (size_t i = 0; i < sub.to_original.size(); ++i)
        if (inst.forced.contains(sub.to_original[i])) wg.weights[i] = 1;
    auto res = wmisds_chordal(wg, *peo);

    ChordalDecision out;
    out.yes = (res.value == 0);
    if (out.yes) {
        VertexSet r(g.n());
        res.solution.for_each([&](int v) { r.add(sub.to_original[v]); });
        out.certificate = complete_to_certificate(g, inst.forced, r);
    }
    return out;
}

MaxExtResult max_ext_vc_chordal(const Graph& g, const VertexSet& u) {
    if (!chordal_peo(g))
        throw Unsupported("max_ext_vc_chordal: input graph is not chordal");
    bool independent = true;
    u.for_each([&](int v) {
        for (int w : g.neighbors(v)) independent &= !u.contains(w);
    });
    if (!independent)
        throw Unsupported("max_ext_vc_chordal: unsupported, forced set must be independent");

    auto sub = induced_subgraph(g, closed_neighborhood(g, u));
    auto peo = chordal_peo(sub.graph);
    assert(peo);
    WeightedGraph wg{sub.graph, std::vector<long long>(sub.graph.n(), 0)};
    for (size_t i = 0; i < sub.to_original.size(); ++i)
        if (u.contains(sub.to_original[i])) wg.weights[i] = 1;
    auto res = wmisds_chordal(wg, *peo);

    MaxExtResult out;
    out.value = u.cardinality() - static_cast<int>(res.value);
    VertexSet isds(g.n());
    res.solution.for_each([&](int v) { isds.add(sub.to_original[v]); });
    out.kept = u.set_minus(isds);
    VertexSet r(g.n());
    isds.for_each([&](int v) {
        if (u.contains(v)) return;
        for (int w : g.neighbors(v))
            if (out.kept.contains(w)) {
                r.add(v);
                return;
            }
    });
    out.certificate = complete_to_certificate(g, out.kept, r);
    return out;
}

int min_ext_is_value(const Graph& g, const VertexSet& u, int oracle_bound) {
    VertexSet rest = u.complement();
    bool rest_independent = true;
    rest.for_each([&](int v) {
        for (int w : g.neighbors(v)) rest_independent &= !rest.contains(w);
    });
    if (rest_independent && chordal_peo(g))
        return g.n() - max_ext_vc_chordal(g, rest).value;
    if (g.n() <= oracle_bound)
        return g.n() - max_ext_vc_opt_bf(g, rest, oracle_bound).value;
    throw Unsupported(
        "min_ext_is_value: neither the chordal route nor the oracle bound applies");
}

}  // namespace extcover
