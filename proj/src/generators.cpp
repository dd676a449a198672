#include "extcover/generators.hpp"

#include <algorithm>
#include <sstream>

#include "extcover/errors.hpp"

namespace extcover {

B2SatFormula parse_cnf(std::istream& in) {
    B2SatFormula f;
    std::string line;
    int declared_clauses = -1;
    bool have_p = false;
    std::vector<int> current;
    std::vector<std::array<int, 3>> clauses;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            std::string kind;
            if (!(ls >> kind >> f.variables >> declared_clauses) || kind != "cnf" ||
                f.variables < 0)
                throw FormatError("cnf: malformed p-line");
            have_p = true;
            continue;
        }
        if (!have_p) throw FormatError("cnf: clause before p-line");
        int lit = std::stoi(tag);
        for (;;) {
            if (lit == 0) {
                if (current.size() != 3)
                    throw FormatError("cnf: clause must have exactly 3 literals");
                clauses.push_back({current[0], current[1], current[2]});
                current.clear();
            } else {
                int var = std::abs(lit);
                if (var < 1 || var > f.variables)
                    throw FormatError("cnf: literal out of range");
                current.push_back(lit);
            }
            if (!(ls >> lit)) break;
        }
    }
    if (!have_p) throw FormatError("cnf: missing p-line");
    if (!current.empty()) throw FormatError("cnf: unterminated clause");
    f.clauses = std::move(clauses);

    std::vector<int> pos(f.variables, 0), neg(f.variables, 0);
    for (const auto& cl : f.clauses) {
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (std::abs(cl[i]) == std::abs(cl[j]))
                    throw FormatError("cnf: clause repeats a variable");
        for (int lit : cl) (lit > 0 ? pos : neg)[std::abs(lit) - 1]++;
    }
    std::string complaints;
    for (int v = 0; v < f.variables; ++v)
        if (pos[v] != 2 || neg[v] != 2)
            complaints += " x" + std::to_string(v + 1) + "(+" + std::to_string(pos[v]) +
                          ",-" + std::to_string(neg[v]) + ")";
    if (!complaints.empty())
        throw FormatError("cnf: variables off the 2-positive/2-negative profile:" +
                          complaints);
    return f;
}

B2SatFormula parse_cnf(const std::string& text) {
    std::istringstream in(text);
    return parse_cnf(in);
}

void write_cnf(std::ostream& out, const B2SatFormula& f) {
    out << "p cnf " << f.variables << " " << f.clause_count() << "\n";
    for (const auto& cl : f.clauses) out << cl[0] << " " << cl[1] << " " << cl[2] << " 0\n";
}

bool sat_bf(const B2SatFormula& f, int max_variables) {
    if (f.variables > max_variables)
        throw BoundExceeded("sat_bf: formula exceeds the exhaustive bound");
    for (uint64_t assign = 0; assign < (uint64_t{1} << f.variables); ++assign) {
        bool all = true;
        for (const auto& cl : f.clauses) {
            bool sat = false;
            for (int lit : cl) {
                bool val = assign >> (std::abs(lit) - 1) & 1;
                sat |= (lit > 0) == val;
            }
            if (!sat) {
                all = false;
                break;
            }
        }
        if (all) return true;
    }
    return f.clauses.empty();
}

GeneratedInstance gen_from_b2sat(const B2SatFormula& f) {
    const int n = f.variables, m = f.clause_count();
    // per variable i: x, l, m, r, nx (copy 1) and nx', l', m', r', x' (copy 2)
    auto x1 = [&](int i) { return 10 * i + 0; };
    auto l1 = [&](int i) { return 10 * i + 1; };
    auto m1 = [&](int i) { return 10 * i + 2; };
    auto r1 = [&](int i) { return 10 * i + 3; };
    auto nx1 = [&](int i) { return 10 * i + 4; };
    auto nx2 = [&](int i) { return 10 * i + 5; };
    auto l2 = [&](int i) { return 10 * i + 6; };
    auto m2 = [&](int i) { return 10 * i + 7; };
    auto r2 = [&](int i) { return 10 * i + 8; };
    auto x2 = [&](int i) { return 10 * i + 9; };
    auto c1 = [&](int j) { return 10 * n + 2 * j; };
    auto c2 = [&](int j) { return 10 * n + 2 * j + 1; };

    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        edges.insert(edges.end(), {{x1(i), l1(i)},
                                   {l1(i), m1(i)},
                                   {m1(i), r1(i)},
                                   {r1(i), nx1(i)},
                                   {nx2(i), l2(i)},
                                   {l2(i), m2(i)},
                                   {m2(i), r2(i)},
                                   {r2(i), x2(i)},
                                   {l1(i), l2(i)},
                                   {m1(i), m2(i)},
                                   {r1(i), r2(i)}});
    }
    for (int j = 0; j < m; ++j)
        for (int lit : f.clauses[j]) {
            int i = std::abs(lit) - 1;
            if (lit > 0) {
                edges.emplace_back(c1(j), x1(i));
                edges.emplace_back(c2(j), x2(i));
            } else {
                edges.emplace_back(c1(j), nx1(i));
                edges.emplace_back(c2(j), nx2(i));
            }
        }

    Graph g(10 * n + 2 * m, std::move(edges));
    VertexSet forced(g.n());
    for (int j = 0; j < m; ++j) {
        forced.add(c1(j));
        forced.add(c2(j));
    }
    for (int i = 0; i < n; ++i) {
        forced.add(m1(i));
        forced.add(m2(i));
    }
    GeneratedInstance out{ExtInstance::ext_vc(std::move(g), std::move(forced)), {}};
    out.provenance = {
        "construction: b2sat-cubic-bipartite",
        "source formula: " + std::to_string(n) + " variables, " + std::to_string(m) +
            " clauses",
        "YES iff the source (3,B2) formula is satisfiable"};
    return out;
}

GeneratedInstance gen_mcis(const Graph& g, const std::vector<VertexSet>& parts) {
    const int n = g.n();
    const int k = static_cast<int>(parts.size());
    std::vector<int> part_of(n, -1);
    for (int i = 0; i < k; ++i) {
        if (parts[i].cardinality() < 2)
            throw std::invalid_argument("gen_mcis: parts must have size at least 2");
        parts[i].for_each([&](int v) {
            if (part_of[v] != -1)
                throw std::invalid_argument("gen_mcis: parts must be disjoint");
            part_of[v] = i;
        });
    }
    for (int v = 0; v < n; ++v)
        if (part_of[v] == -1)
            throw std::invalid_argument("gen_mcis: parts must cover every vertex");

    // copies: v -> v, n+v; forced pairs: w_i = 2n+i, w'_i = 2n+k+i
    auto mirror = [&](int v) { return n + v; };
    auto w = [&](int i) { return 2 * n + i; };
    auto wbar = [&](int i) { return 2 * n + k + i; };

    std::vector<Edge> edges;
    for (auto [a, b] : g.edges()) {
        edges.emplace_back(a, mirror(b));
        edges.emplace_back(b, mirror(a));
    }
    // parts completed to cliques
    for (int i = 0; i < k; ++i) {
        auto members = parts[i].to_vector();
        for (size_t a = 0; a < members.size(); ++a)
            for (size_t b = a + 1; b < members.size(); ++b) {
                edges.emplace_back(members[a], mirror(members[b]));
                edges.emplace_back(members[b], mirror(members[a]));
            }
    }
    for (int i = 0; i < k; ++i) {
        edges.emplace_back(w(i), wbar(i));
        parts[i].for_each([&](int v) {
            edges.emplace_back(v, wbar(i));
            edges.emplace_back(mirror(v), w(i));
        });
    }

    Graph out_graph(2 * n + 2 * k, std::move(edges));
    VertexSet forced(out_graph.n());
    for (int i = 0; i < k; ++i) {
        forced.add(w(i));
        forced.add(wbar(i));
    }
    GeneratedInstance out{ExtInstance::ext_vc(std::move(out_graph), std::move(forced)), {}};
    out.provenance = {
        "construction: multicolored-independent-set-gadget",
        "source graph: " + std::to_string(n) + " vertices, " + std::to_string(k) +
            " parts",
        "YES iff the source graph has one independent vertex per part"};
    return out;
}

GeneratedInstance gen_maxis_gadget(const Graph& g) {
    const int n = g.n();
    std::vector<Edge> edges = g.edges();
    for (int v = 0; v < n; ++v) edges.emplace_back(v, n + v);
    Graph out_graph(2 * n, std::move(edges));
    VertexSet forced(out_graph.n());
    for (int v = 0; v < n; ++v) forced.add(n + v);
    GeneratedInstance out{ExtInstance::ext_vc(std::move(out_graph), std::move(forced)), {}};
    out.provenance = {
        "construction: pendant-copy-maxis-gadget",
        "source graph: " + std::to_string(n) + " vertices",
        "optimal Max Ext VC value equals the independence number of the source"};
    return out;
}

}  // namespace extcover
