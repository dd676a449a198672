#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "extcover/approx.hpp"
#include "extcover/branch.hpp"
#include "extcover/chordal_solver.hpp"
#include "extcover/errors.hpp"
#include "extcover/generators.hpp"
#include "extcover/hcover.hpp"
#include "extcover/kernelize.hpp"
#include "extcover/oracle.hpp"
#include "extcover/tree.hpp"

namespace py = pybind11;
using namespace extcover;

namespace {

VertexSet to_set(int n, const std::vector<int>& vertices) {
    return VertexSet::from_vector(n, vertices);
}

py::dict certificate_dict(const Certificate& cert) {
    py::dict out;
    out["solution"] = cert.solution.to_vector();
    py::dict edges;
    for (const auto& [v, e] : cert.edge_witnesses)
        edges[py::int_(v)] = py::make_tuple(e.first, e.second);
    out["edge_witnesses"] = edges;
    py::dict copies;
    for (const auto& [v, c] : cert.copy_witnesses) copies[py::int_(v)] = c;
    out["copy_witnesses"] = copies;
    return out;
}

py::dict solve_dict(const SolveResult& r) {
    py::dict out;
    out["yes"] = r.yes;
    if (r.certificate) out["certificate"] = certificate_dict(*r.certificate);
    py::dict stats;
    stats["nodes_expanded"] = r.stats.nodes_expanded;
    stats["max_depth"] = r.stats.max_depth;
    stats["branch_u_removed_min"] = r.stats.branch_u_removed_min;
    stats["branch_u_removed_max"] = r.stats.branch_u_removed_max;
    py::dict firings;
    for (const auto& [rule, count] : r.stats.rule_firings)
        firings[py::str(rule_name(rule))] = count;
    stats["rule_firings"] = firings;
    out["stats"] = stats;
    return out;
}

Pattern make_pattern(const Graph& h) { return Pattern(h); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "extension problems on graphs: minimal vertex cover, maximal "
              "independent set and pattern cover extension";

    py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
    py::register_exception<BoundExceeded>(m, "BoundExceeded", PyExc_RuntimeError);
    py::register_exception<Unsupported>(m, "Unsupported", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<Edge>& edges) {
                 return Graph(n, edges);
             }),
             py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::n)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("edges", &Graph::edges)
        .def("neighbors",
             [](const Graph& g, int v) {
                 auto nb = g.neighbors(v);
                 return std::vector<int>(nb.begin(), nb.end());
             })
        .def("degree", &Graph::degree)
        .def("max_degree", &Graph::max_degree)
        .def("has_edge", &Graph::has_edge)
        .def("__repr__", [](const Graph& g) {
            std::ostringstream s;
            s << "Graph(n=" << g.n() << ", m=" << g.edge_count() << ")";
            return s.str();
        });

    py::class_<Pattern>(m, "Pattern")
        .def(py::init(&make_pattern), py::arg("h"))
        .def_static("k2", &Pattern::k2)
        .def_static("k3", &Pattern::k3)
        .def_static("p3", &Pattern::p3)
        .def_static("clique", &Pattern::clique)
        .def_static("path", &Pattern::path)
        .def_property_readonly("order", &Pattern::order);

    m.def("parse_dimacs", [](const std::string& text) { return parse_dimacs(text); });
    m.def("write_dimacs", [](const Graph& g) { return write_dimacs(g); });

    m.def("closed_neighborhood", [](const Graph& g, const std::vector<int>& u) {
        return closed_neighborhood(g, to_set(g.n(), u)).to_vector();
    });
    m.def("induced_subgraph", [](const Graph& g, const std::vector<int>& w) {
        auto sub = induced_subgraph(g, to_set(g.n(), w));
        return py::make_tuple(sub.graph, sub.to_original);
    });
    m.def("classify", [](const Graph& g) {
        auto c = classify(g);
        py::dict out;
        out["is_forest"] = c.is_forest;
        out["max_degree"] = c.max_degree;
        if (c.bipartition)
            out["bipartition"] = py::make_tuple(c.bipartition->first.to_vector(),
                                                c.bipartition->second.to_vector());
        else
            out["bipartition"] = py::none();
        std::vector<std::vector<int>> comps;
        for (const auto& comp : c.components) comps.push_back(comp.to_vector());
        out["components"] = comps;
        return out;
    });
    m.def("greedy_coloring", &greedy_coloring);
    m.def("chordal_peo", [](const Graph& g) -> py::object {
        auto peo = chordal_peo(g);
        if (!peo) return py::none();
        return py::cast(*peo);
    });
    m.def("random_interval_graph", &random_interval_graph, py::arg("n"), py::arg("seed"));

    m.def("is_minimal_vertex_cover", [](const Graph& g, const std::vector<int>& s) {
        return is_minimal_vertex_cover(g, to_set(g.n(), s));
    });
    m.def("is_maximal_independent_set", [](const Graph& g, const std::vector<int>& s) {
        return is_maximal_independent_set(g, to_set(g.n(), s));
    });
    m.def("is_h_free",
          [](const Graph& g, const Pattern& h, const std::vector<int>& w) {
              return is_h_free(g, h, to_set(g.n(), w));
          });
    m.def("is_minimal_h_cover",
          [](const Graph& g, const Pattern& h, const std::vector<int>& s) {
              return is_minimal_h_cover(g, h, to_set(g.n(), s));
          });

    m.def(
        "maximal_independent_sets",
        [](const Graph& g, int bound) {
            std::vector<std::vector<int>> out;
            for (const auto& s : maximal_independent_sets(g, bound))
                out.push_back(s.to_vector());
            return out;
        },
        py::arg("g"), py::arg("bound") = kDefaultOracleBound);
    m.def(
        "decide_ext_vc_bf",
        [](const Graph& g, const std::vector<int>& u, int bound) {
            auto r = decide_ext_vc_bf(ExtInstance::ext_vc(g, to_set(g.n(), u)), bound);
            py::dict out;
            out["yes"] = r.yes;
            if (r.certificate) out["certificate"] = certificate_dict(*r.certificate);
            return out;
        },
        py::arg("g"), py::arg("forced"), py::arg("bound") = kDefaultOracleBound);
    m.def(
        "decide_ext_is_bf",
        [](const Graph& g, const std::vector<int>& u, int bound) {
            auto r = decide_ext_is_bf(ExtInstance::ext_is(g, to_set(g.n(), u)), bound);
            py::dict out;
            out["yes"] = r.yes;
            if (r.certificate)
                out["independent_set"] = r.certificate->solution.to_vector();
            return out;
        },
        py::arg("g"), py::arg("permitted"), py::arg("bound") = kDefaultOracleBound);
    m.def(
        "max_ext_vc_opt_bf",
        [](const Graph& g, const std::vector<int>& u, int bound) {
            auto r = max_ext_vc_opt_bf(g, to_set(g.n(), u), bound);
            return py::make_tuple(r.value, r.witness.to_vector());
        },
        py::arg("g"), py::arg("forced"), py::arg("bound") = kDefaultOracleBound);
    m.def(
        "min_wisds_bf",
        [](const Graph& g, const std::vector<long long>& w, int bound) {
            return min_wisds_bf(g, w, bound);
        },
        py::arg("g"), py::arg("weights"), py::arg("bound") = kDefaultOracleBound);
    m.def(
        "decide_ext_hcover_bf",
        [](const Graph& g, const Pattern& h, const std::vector<int>& u, int bound) {
            return decide_ext_hcover_bf(g, h, to_set(g.n(), u), bound);
        },
        py::arg("g"), py::arg("h"), py::arg("forced"),
        py::arg("bound") = kDefaultHCoverOracleBound);
    m.def(
        "independence_number_bf",
        [](const Graph& g, int bound) { return independence_number_bf(g, bound); },
        py::arg("g"), py::arg("bound") = kDefaultOracleBound);

    m.def("solve_fpt", [](const Graph& g, const std::vector<int>& u) {
        return solve_dict(solve_fpt(ExtInstance::ext_vc(g, to_set(g.n(), u))));
    });
    m.def("solve_exact", [](const Graph& g, const std::vector<int>& u) {
        return solve_dict(solve_exact(ExtInstance::ext_vc(g, to_set(g.n(), u))));
    });
    m.def("decide_forest", [](const Graph& g, const std::vector<int>& u) {
        auto r = decide_forest(ExtInstance::ext_vc(g, to_set(g.n(), u)));
        py::dict out;
        out["yes"] = r.yes;
        if (r.certificate) out["certificate"] = certificate_dict(*r.certificate);
        return out;
    });
    m.def("decide_ext_vc_chordal", [](const Graph& g, const std::vector<int>& u) {
        auto r = decide_ext_vc_chordal(ExtInstance::ext_vc(g, to_set(g.n(), u)));
        py::dict out;
        out["yes"] = r.yes;
        if (r.certificate) out["certificate"] = certificate_dict(*r.certificate);
        return out;
    });
    m.def("wmisds_chordal", [](const Graph& g, const std::vector<long long>& w,
                               const std::vector<int>& peo) {
        auto r = wmisds_chordal({g, w}, peo);
        return py::make_tuple(r.value, r.solution.to_vector());
    });
    m.def("max_ext_vc_chordal", [](const Graph& g, const std::vector<int>& u) {
        auto r = max_ext_vc_chordal(g, to_set(g.n(), u));
        py::dict out;
        out["value"] = r.value;
        out["kept"] = r.kept.to_vector();
        out["certificate"] = certificate_dict(r.certificate);
        return out;
    });
    m.def(
        "min_ext_is_value",
        [](const Graph& g, const std::vector<int>& u, int bound) {
            return min_ext_is_value(g, to_set(g.n(), u), bound);
        },
        py::arg("g"), py::arg("forced"), py::arg("bound") = kDefaultOracleBound);

    m.def("approx_bipartite", [](const Graph& g, const std::vector<int>& u) {
        auto r = approx_bipartite(g, to_set(g.n(), u));
        py::dict out;
        out["value"] = r.value;
        out["certificate"] = certificate_dict(r.certificate);
        return out;
    });
    m.def("approx_degree", [](const Graph& g, const std::vector<int>& u) {
        auto r = approx_degree(g, to_set(g.n(), u));
        py::dict out;
        out["value"] = r.value;
        out["certificate"] = certificate_dict(r.certificate);
        return out;
    });

    m.def("apply_rules", [](const Graph& g, const std::vector<int>& u) {
        auto r = apply_rules(ExtInstance::ext_vc(g, to_set(g.n(), u)));
        py::dict out;
        out["reduced_graph"] = r.reduced.graph;
        out["reduced_forced"] = r.reduced.forced.to_vector();
        out["to_original"] = r.to_original;
        out["trace"] = serialize_trace(r.trace);
        out["verdict"] = r.verdict ? py::cast(*r.verdict) : py::none();
        out["donors"] = r.donors;
        return out;
    });
    m.def("kernel_size_report", [](const Graph& g, const std::vector<int>& u) {
        auto r = kernel_size_report(ExtInstance::ext_vc(g, to_set(g.n(), u)));
        return py::make_tuple(r.reduced_n, r.bound);
    });
    m.def("restrict_to_closed_neighborhood", [](const Graph& g,
                                                const std::vector<int>& u) {
        auto r = restrict_to_closed_neighborhood(ExtInstance::ext_vc(g, to_set(g.n(), u)));
        return py::make_tuple(r.instance.graph, r.instance.forced.to_vector(),
                              r.to_original);
    });

    m.def("is_in_class_t", [](const Graph& tree, const std::vector<int>& black) {
        return is_in_T(ColoredTree{tree, to_set(tree.n(), black)});
    });
    m.def(
        "find_forbidden_subtree",
        [](const Graph& t, const std::vector<int>& u, int bound) -> py::object {
            auto r = find_forbidden_subtree(t, to_set(t.n(), u), bound);
            if (!r) return py::none();
            return py::cast(r->to_vector());
        },
        py::arg("t"), py::arg("forced"), py::arg("bound") = 18);

    m.def(
        "decide_ext_hcover",
        [](const Graph& g, const Pattern& h, const std::vector<int>& u,
           long long budget) {
            auto r = decide_ext_hcover(g, h, to_set(g.n(), u), budget);
            py::dict out;
            out["yes"] = r.yes;
            py::dict family;
            for (const auto& [v, copy] : r.witness_family) family[py::int_(v)] = copy;
            out["witness_family"] = family;
            if (r.certificate) out["certificate"] = certificate_dict(*r.certificate);
            return out;
        },
        py::arg("g"), py::arg("h"), py::arg("forced"),
        py::arg("budget") = kDefaultHCoverBudget);
    m.def(
        "decide_ext_induced_hfree",
        [](const Graph& g, const Pattern& h, const std::vector<int>& u,
           long long budget) {
            return decide_ext_induced_hfree(g, h, to_set(g.n(), u), budget);
        },
        py::arg("g"), py::arg("h"), py::arg("permitted"),
        py::arg("budget") = kDefaultHCoverBudget);

    m.def("parse_cnf", [](const std::string& text) {
        auto f = parse_cnf(text);
        py::dict out;
        out["variables"] = f.variables;
        out["clauses"] = f.clauses;
        return out;
    });
    m.def(
        "sat_bf",
        [](int variables, const std::vector<std::array<int, 3>>& clauses,
           int max_variables) {
            B2SatFormula f;
            f.variables = variables;
            f.clauses = clauses;
            return sat_bf(f, max_variables);
        },
        py::arg("variables"), py::arg("clauses"), py::arg("max_variables") = 24);
    auto gen_dict = [](const GeneratedInstance& gen) {
        py::dict out;
        out["graph"] = gen.instance.graph;
        out["forced"] = gen.instance.forced.to_vector();
        out["provenance"] = gen.provenance;
        return out;
    };
    m.def("gen_from_b2sat",
          [gen_dict](int variables, const std::vector<std::array<int, 3>>& clauses) {
              B2SatFormula f;
              f.variables = variables;
              f.clauses = clauses;
              return gen_dict(gen_from_b2sat(f));
          });
    m.def("gen_mcis",
          [gen_dict](const Graph& g, const std::vector<std::vector<int>>& parts) {
              std::vector<VertexSet> sets;
              for (const auto& p : parts) sets.push_back(to_set(g.n(), p));
              return gen_dict(gen_mcis(g, sets));
          });
    m.def("gen_maxis_gadget",
          [gen_dict](const Graph& g) { return gen_dict(gen_maxis_gadget(g)); });
}
