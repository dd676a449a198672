#include "extcover/kernelize.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace extcover {

const char* rule_name(Rule r) {
    switch (r) {
        case Rule::R0: return "R0";
        case Rule::R1: return "R1";
        case Rule::R2: return "R2";
        case Rule::R3: return "R3";
        case Rule::R4: return "R4";
        case Rule::R5: return "R5";
        case Rule::R5p: return "R5'";
        case Rule::R6: return "R6";
    }
    return "?";
}

namespace {

class RuleEngine {
public:
    explicit RuleEngine(const ExtInstance& inst) : g_(inst.graph) {
        const int n = g_.n();
        alive_.assign(n, 1);
        in_u_.assign(n, 0);
        deg_.assign(n, 0);
        u_deg_.assign(n, 0);
        partner_.assign(n, -1);
        inst.forced.for_each([&](int v) { in_u_[v] = 1; });
        u_count_ = inst.forced.cardinality();
        for (int v = 0; v < n; ++v) deg_[v] = g_.degree(v);
        for (int v = 0; v < n; ++v) {
            int c = 0;
            for (int w : g_.neighbors(v)) c += in_u_[w];
            u_deg_[v] = c;
        }
        for (int v = 0; v < n; ++v) {
            refresh(v);
            if (in_u_[v])
                for (int w : g_.neighbors(v))
                    if (v < w && in_u_[w]) r3_.insert({v, w});
        }
    }

    std::optional<TraceStep> step() {
        if (verdict_.has_value()) return std::nullopt;
        if (u_count_ == 0) {
            verdict_ = true;
            return make_verdict(Rule::R0, true);
        }
        if (!r1_.empty()) {
            verdict_ = false;
            return make_verdict(Rule::R1, false);
        }
        if (!r2_.empty()) {
            int x = *r2_.begin();
            TraceStep s{Rule::R2, {x}, {}, {}, std::nullopt};
            delete_vertex(x);
            return s;
        }
        if (!r3_.empty()) {
            auto [a, b] = *r3_.begin();
            TraceStep s{Rule::R3, {}, {{a, b}}, {}, std::nullopt};
            delete_edge(a, b);
            return s;
        }
        if (!r4_.empty()) {
            int u = *r4_.begin();
            int x = sole_neighbor(u);
            return fire_exclusion(Rule::R4, x);
        }
        if (!r5_.empty()) {
            auto [u, x] = *r5_.begin();
            donors_.push_back(x);
            TraceStep s{Rule::R5, {std::min(u, x), std::max(u, x)}, {}, {u}, std::nullopt};
            delete_vertex(u);
            delete_vertex(x);
            return s;
        }
        if (!r5p_.empty()) {
            int x = *r5p_.begin();
            return fire_exclusion(Rule::R5p, x);
        }
        if (!r6_.empty()) {
            std::vector<int> batch(r6_.begin(), r6_.end());
            for (int v : batch) delete_vertex(v);
            return TraceStep{Rule::R6, std::move(batch), {}, {}, std::nullopt};
        }
        return std::nullopt;
    }

    void run() {
        trace_.steps.clear();
        while (auto s = step()) trace_.steps.push_back(std::move(*s));
    }

    bool alive(int v) const { return alive_[v]; }
    bool in_u(int v) const { return in_u_[v]; }
    bool edge_intact(int a, int b) const {
        if (!alive_[a] || !alive_[b]) return false;
        if (in_u_[a] && in_u_[b])
            return !deleted_edges_.count({std::min(a, b), std::max(a, b)});
        return true;
    }

    RuleEngineResult materialize(const ExtInstance& inst) const {
        RuleEngineResult out{ExtInstance{}, {}, trace_, verdict_, donors_};
        const int n = g_.n();
        std::vector<int> to_new(n, -1);
        if (!verdict_.has_value()) {
            for (int v = 0; v < n; ++v)
                if (alive_[v]) {
                    to_new[v] = static_cast<int>(out.to_original.size());
                    out.to_original.push_back(v);
                }
        }
        std::vector<Edge> edges;
        for (int v : out.to_original)
            for (int w : g_.neighbors(v))
                if (v < w && to_new[w] >= 0 && edge_intact(v, w))
                    edges.emplace_back(to_new[v], to_new[w]);
        Graph rg(static_cast<int>(out.to_original.size()), std::move(edges));
        VertexSet ru(rg.n());
        for (size_t i = 0; i < out.to_original.size(); ++i)
            if (in_u_[out.to_original[i]]) ru.add(static_cast<int>(i));
        out.reduced = ExtInstance::ext_vc(std::move(rg), std::move(ru));
        out.reduced.kind = inst.kind;
        out.reduced.pattern = inst.pattern;
        return out;
    }

private:
    TraceStep make_verdict(Rule r, bool yes) { return TraceStep{r, {}, {}, {}, yes}; }

    int sole_neighbor(int v) const {
        for (int w : g_.neighbors(v))
            if (edge_intact(v, w)) return w;
        throw std::logic_error("rule engine: expected a remaining neighbor");
    }

    // R4 / R5': exclude x from the cover, removing N[x]; U-members of N(x)
    // receive x-edges as private edges.
    TraceStep fire_exclusion(Rule rule, int x) {
        donors_.push_back(x);
        std::vector<int> batch = {x};
        std::vector<int> removed_u;
        for (int w : g_.neighbors(x))
            if (edge_intact(x, w)) {
                batch.push_back(w);
                if (in_u_[w]) removed_u.push_back(w);
            }
        std::sort(batch.begin(), batch.end());
        std::sort(removed_u.begin(), removed_u.end());
        for (int v : batch) delete_vertex(v);
        return TraceStep{rule, std::move(batch), {}, std::move(removed_u), std::nullopt};
    }

    void delete_vertex(int v) {
        if (!alive_[v]) return;
        bool was_u = in_u_[v];
        alive_[v] = 0;
        if (was_u) {
            in_u_[v] = 0;
            --u_count_;
            for (int w : g_.neighbors(v))
                if (in_u_[w]) r3_.erase({std::min(v, w), std::max(v, w)});
        }
        for (int w : g_.neighbors(v)) {
            if (!alive_[w]) continue;
            bool was_intact = was_u && in_u_[w]
                                  ? !deleted_edges_.count({std::min(v, w), std::max(v, w)})
                                  : true;
            if (!was_intact) continue;
            --deg_[w];
            if (was_u) --u_deg_[w];
            refresh(w);
        }
        refresh(v);
    }

    void delete_edge(int a, int b) {
        deleted_edges_.insert({std::min(a, b), std::max(a, b)});
        r3_.erase({std::min(a, b), std::max(a, b)});
        --deg_[a];
        --deg_[b];
        --u_deg_[a];
        --u_deg_[b];
        refresh(a);
        refresh(b);
    }

    void refresh(int v) {
        r1_.erase(v);
        r2_.erase(v);
        r4_.erase(v);
        r5p_.erase(v);
        r6_.erase(v);
        if (partner_[v] != -1) {
            r5_.erase({partner_[v], v});
            partner_[v] = -1;
        }
        if (!alive_[v]) return;
        if (in_u_[v]) {
            if (deg_[v] == 0) r1_.insert(v);
            if (deg_[v] == 1) r4_.insert(v);
        } else {
            if (deg_[v] == 0) r2_.insert(v);
            if (u_deg_[v] == 0) r6_.insert(v);
            if (deg_[v] >= 1 && u_deg_[v] == deg_[v]) r5p_.insert(v);
            if (deg_[v] == 1) {
                int y = sole_neighbor(v);
                if (in_u_[y]) {
                    partner_[v] = y;
                    r5_.insert({y, v});
                }
            }
        }
    }

    const Graph& g_;
    std::vector<char> alive_, in_u_;
    std::vector<int> deg_, u_deg_, partner_;
    int u_count_ = 0;
    std::set<Edge> deleted_edges_;
    std::set<int> r1_, r2_, r4_, r5p_, r6_;
    std::set<Edge> r3_, r5_;  // r5 keyed (u, x)
    std::optional<bool> verdict_;
    ReductionTrace trace_;
    std::vector<int> donors_;
};

void require_vc(const ExtInstance& inst, const char* op) {
    if (inst.kind != ProblemKind::ExtVC)
        throw std::invalid_argument(std::string(op) + ": expected an Ext VC instance");
}

}  // namespace

std::string serialize_trace(const ReductionTrace& trace) {
    std::ostringstream out;
    auto ids = [&](const std::vector<int>& v) {
        std::string s;
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(v[i] + 1);
        }
        return s;
    };
    for (const auto& step : trace.steps) {
        out << "rule=" << rule_name(step.rule) << " removed_v=" << ids(step.removed_v)
            << " removed_e=";
        for (size_t i = 0; i < step.removed_e.size(); ++i) {
            if (i) out << ",";
            out << step.removed_e[i].first + 1 << "-" << step.removed_e[i].second + 1;
        }
        out << " removed_u=" << ids(step.removed_u);
        if (step.verdict.has_value()) out << " verdict=" << (*step.verdict ? "YES" : "NO");
        out << "\n";
    }
    return out.str();
}

RuleEngineResult apply_rules(const ExtInstance& inst) {
    require_vc(inst, "apply_rules");
    RuleEngine engine(inst);
    engine.run();
    return engine.materialize(inst);
}

std::optional<SingleStep> apply_first_rule_once(const ExtInstance& inst) {
    require_vc(inst, "apply_first_rule_once");
    RuleEngine engine(inst);
    auto step = engine.step();
    if (!step) return std::nullopt;
    auto mat = engine.materialize(inst);
    return SingleStep{std::move(mat.reduced), std::move(mat.to_original), std::move(*step)};
}

std::optional<Rule> first_applicable_rule(const ExtInstance& inst) {
    require_vc(inst, "first_applicable_rule");
    RuleEngine engine(inst);
    auto step = engine.step();
    if (!step) return std::nullopt;
    return step->rule;
}

Restriction restrict_to_closed_neighborhood(const ExtInstance& inst) {
    require_vc(inst, "restrict_to_closed_neighborhood");
    VertexSet keep = closed_neighborhood(inst.graph, inst.forced);
    auto sub = induced_subgraph(inst.graph, keep);
    VertexSet u(sub.graph.n());
    for (size_t i = 0; i < sub.to_original.size(); ++i)
        if (inst.forced.contains(sub.to_original[i])) u.add(static_cast<int>(i));
    return Restriction{ExtInstance::ext_vc(std::move(sub.graph), std::move(u)),
                       std::move(sub.to_original)};
}

KernelReport kernel_size_report(const ExtInstance& inst) {
    require_vc(inst, "kernel_size_report");
    auto res = apply_rules(inst);
    KernelReport report;
    report.reduced_n = res.verdict.has_value() ? 0 : res.reduced.graph.n();
    report.bound = static_cast<long long>(inst.graph.max_degree() + 1) *
                   inst.forced.cardinality();
    return report;
}

ReplayResult replay_trace(const ExtInstance& inst, const ReductionTrace& trace) {
    require_vc(inst, "replay_trace");
    const int n = inst.graph.n();
    std::vector<char> alive(n, 1), in_u(n, 0);
    inst.forced.for_each([&](int v) { in_u[v] = 1; });
    std::set<Edge> deleted;
    for (const auto& step : trace.steps) {
        for (auto e : step.removed_e) deleted.insert({std::min(e.first, e.second),
                                                      std::max(e.first, e.second)});
        for (int v : step.removed_v) alive[v] = 0;
        for (int v : step.removed_u) in_u[v] = 0;
        if (step.verdict.has_value())
            return ReplayResult{ExtInstance::ext_vc(Graph(0, {}), VertexSet(0)), {}};
    }
    std::vector<int> to_original;
    std::vector<int> to_new(n, -1);
    for (int v = 0; v < n; ++v)
        if (alive[v]) {
            to_new[v] = static_cast<int>(to_original.size());
            to_original.push_back(v);
        }
    std::vector<Edge> edges;
    for (int v : to_original)
        for (int w : inst.graph.neighbors(v))
            if (v < w && to_new[w] >= 0 && !deleted.count({v, w}))
                edges.emplace_back(to_new[v], to_new[w]);
    Graph rg(static_cast<int>(to_original.size()), std::move(edges));
    VertexSet ru(rg.n());
    for (size_t i = 0; i < to_original.size(); ++i)
        if (in_u[to_original[i]]) ru.add(static_cast<int>(i));
    return ReplayResult{ExtInstance::ext_vc(std::move(rg), std::move(ru)),
                        std::move(to_original)};
}

}  // namespace extcover
