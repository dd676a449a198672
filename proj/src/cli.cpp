#include "extcover/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "extcover/approx.hpp"
#include "extcover/branch.hpp"
#include "extcover/chordal_solver.hpp"
#include "extcover/errors.hpp"
#include "extcover/generators.hpp"
#include "extcover/hcover.hpp"
#include "extcover/oracle.hpp"
#include "extcover/tree.hpp"

namespace extcover {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitFile = 3;
constexpr int kExitRefused = 4;
constexpr int kExitYes = 10;
constexpr int kExitNo = 11;

int oracle_bound_from_env() {
    if (const char* s = std::getenv("EXT_ORACLE_BOUND")) {
        int v = std::atoi(s);
        if (v > 0) return v;
    }
    return kDefaultOracleBound;
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open graph file: " + path);
    return parse_dimacs(in);
}

VertexSet parse_id_list(const std::string& spec, int n) {
    VertexSet s(n);
    std::istringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        int v = std::stoi(item);
        if (v < 1 || v > n) throw FormatError("vertex id out of range: " + item);
        s.add(v - 1);
    }
    return s;
}

VertexSet load_forced(const std::string& inline_spec, const std::string& file, int n) {
    if (!inline_spec.empty() && !file.empty())
        throw FormatError("give either --forced or --forced-file, not both");
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw FormatError("cannot open forced-set file: " + file);
        return parse_vertex_list(in, n);
    }
    if (!inline_spec.empty()) return parse_id_list(inline_spec, n);
    return VertexSet(n);
}

std::string id_list(const VertexSet& s) {
    std::string out;
    bool first = true;
    s.for_each([&](int v) {
        if (!first) out += ",";
        out += std::to_string(v + 1);
        first = false;
    });
    return out;
}

void print_certificate(std::ostream& out, const Certificate& cert) {
    out << "cover: " << id_list(cert.solution) << "\n";
    for (const auto& [v, e] : cert.edge_witnesses)
        out << "witness: " << v + 1 << "->" << e.first + 1 << "," << e.second + 1 << "\n";
    for (const auto& [v, copy] : cert.copy_witnesses) {
        out << "witness: " << v + 1 << "->";
        for (size_t i = 0; i < copy.size(); ++i)
            out << (i ? "," : "") << copy[i] + 1;
        out << "\n";
    }
}

struct DecideOutcome {
    bool yes = false;
    std::optional<Certificate> certificate;
    std::optional<BranchStats> stats;
};

DecideOutcome decide_vc_with(const std::string& algorithm, const ExtInstance& inst,
                             int oracle_bound) {
    DecideOutcome out;
    std::string algo = algorithm;
    if (algo == "auto") {
        auto cls = classify(inst.graph);
        if (cls.is_forest)
            algo = "tree";
        else if (chordal_peo(inst.graph))
            algo = "chordal";
        else {
            double est = 1;
            int k = inst.forced.cardinality();
            for (int i = 0; i < k && est <= 1e6; ++i) est *= std::max(1, cls.max_degree);
            algo = est <= 1e6 ? "fpt" : "exact";
        }
    }
    if (algo == "tree") {
        auto r = decide_forest(inst);
        out.yes = r.yes;
        out.certificate = std::move(r.certificate);
    } else if (algo == "chordal") {
        auto r = decide_ext_vc_chordal(inst);
        out.yes = r.yes;
        out.certificate = std::move(r.certificate);
    } else if (algo == "fpt") {
        auto r = solve_fpt(inst);
        out.yes = r.yes;
        out.certificate = std::move(r.certificate);
        out.stats = std::move(r.stats);
    } else if (algo == "exact") {
        auto r = solve_exact(inst);
        out.yes = r.yes;
        out.certificate = std::move(r.certificate);
        out.stats = std::move(r.stats);
    } else if (algo == "oracle") {
        auto r = decide_ext_vc_bf(inst, oracle_bound);
        out.yes = r.yes;
        out.certificate = std::move(r.certificate);
    } else {
        throw CLI::ValidationError("--algorithm", "unknown algorithm: " + algo);
    }
    return out;
}

int finish_decision(bool quiet, bool yes) {
    if (quiet) return yes ? kExitYes : kExitNo;
    return kExitOk;
}

struct BenchRow {
    std::string instance;
    int n = 0, m = 0, u = 0;
    std::string algorithm;
    bool yes = false;
    long long nodes = 0;
    long long micros = 0;
};

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"extension problems on graphs: minimal vertex cover / maximal "
                 "independent set / pattern cover extension"};
    app.require_subcommand(1);

    // ---- decide ----
    auto* decide = app.add_subcommand("decide", "decide an extension instance");
    decide->require_subcommand(1);
    std::string graph_path, forced_spec, forced_file, algorithm = "auto", pattern_path;
    bool quiet = false;
    long long hcover_budget = kDefaultHCoverBudget;
    auto add_common = [&](CLI::App* cmd, bool with_algorithm) {
        cmd->add_option("--graph", graph_path, "DIMACS edge file")->required();
        cmd->add_option("--forced", forced_spec, "forced vertex ids, e.g. \"1,4,7\"");
        cmd->add_option("--forced-file", forced_file, "forced-set file, one id per line");
        cmd->add_flag("--quiet", quiet, "no output; exit 10 = YES, 11 = NO");
        if (with_algorithm)
            cmd->add_option("--algorithm", algorithm,
                            "auto|tree|chordal|fpt|exact|oracle");
    };
    auto* decide_vc = decide->add_subcommand("vc", "minimal vertex cover extension");
    add_common(decide_vc, true);
    auto* decide_is = decide->add_subcommand("is", "maximal independent set extension");
    add_common(decide_is, true);
    auto* decide_hc = decide->add_subcommand("hcover", "minimal H-cover extension");
    add_common(decide_hc, false);
    decide_hc->add_option("--pattern", pattern_path, "pattern H as DIMACS edge file")
        ->required();
    decide_hc->add_option("--budget", hcover_budget, "candidate-product budget");

    // ---- maxext / minext ----
    auto* maxext = app.add_subcommand("maxext", "price of extension, cover side");
    auto* maxext_vc = maxext->add_subcommand("vc", "maximize |S ∩ U| over minimal covers");
    std::string method = "exact";
    add_common(maxext_vc, false);
    maxext_vc->add_option("--method", method, "exact|approx-bipartite|approx-degree|oracle");

    auto* minext = app.add_subcommand("minext", "price of extension, independent side");
    auto* minext_is = minext->add_subcommand("is", "minimize |U| + |S \\ U| over maximal "
                                                   "independent sets");
    add_common(minext_is, false);

    // ---- oracle ----
    auto* oracle = app.add_subcommand("oracle", "brute-force reference layer");
    oracle->require_subcommand(1);
    auto* oracle_enum = oracle->add_subcommand("enumerate", "list maximal independent sets");
    oracle_enum->add_option("--graph", graph_path, "DIMACS edge file")->required();
    auto* oracle_decide = oracle->add_subcommand("decide", "decide by brute force");
    oracle_decide->require_subcommand(1);
    auto* obf_vc = oracle_decide->add_subcommand("vc", "");
    add_common(obf_vc, false);
    auto* obf_is = oracle_decide->add_subcommand("is", "");
    add_common(obf_is, false);
    auto* obf_hc = oracle_decide->add_subcommand("hcover", "");
    add_common(obf_hc, false);
    obf_hc->add_option("--pattern", pattern_path, "pattern H as DIMACS edge file")
        ->required();
    auto* oracle_opt = oracle->add_subcommand("opt", "max |S ∩ U| by brute force");
    add_common(oracle_opt, false);

    // ---- generate ----
    auto* generate = app.add_subcommand("generate", "reduction-based instance generators");
    generate->require_subcommand(1);
    std::string cnf_path, out_graph_path, out_forced_path, parts_spec;
    auto* gen_b2 = generate->add_subcommand("b2sat", "cubic bipartite instance from a "
                                                     "(3,B2) formula");
    gen_b2->add_option("--cnf", cnf_path, "DIMACS CNF file")->required();
    gen_b2->add_option("--out-graph", out_graph_path, "output DIMACS file")->required();
    gen_b2->add_option("--out-forced", out_forced_path, "output forced-set file")
        ->required();
    auto* gen_mc = generate->add_subcommand("mcis", "bipartite instance from multicolored "
                                                    "independent set");
    gen_mc->add_option("--graph", graph_path, "source DIMACS file")->required();
    gen_mc->add_option("--parts", parts_spec, "partition, e.g. \"1,2;3,4\"")->required();
    gen_mc->add_option("--out-graph", out_graph_path, "output DIMACS file")->required();
    gen_mc->add_option("--out-forced", out_forced_path, "output forced-set file")
        ->required();
    auto* gen_mx = generate->add_subcommand("maxis-gadget", "pendant-copy gadget");
    gen_mx->add_option("--graph", graph_path, "source DIMACS file")->required();
    gen_mx->add_option("--out-graph", out_graph_path, "output DIMACS file")->required();
    gen_mx->add_option("--out-forced", out_forced_path, "output forced-set file")
        ->required();

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "check a claimed solution");
    std::string kind = "vc", solution_spec, solution_file;
    verify->add_option("--graph", graph_path, "DIMACS edge file")->required();
    verify->add_option("--kind", kind, "vc|is|hcover");
    verify->add_option("--solution", solution_spec, "solution ids, e.g. \"2,3\"");
    verify->add_option("--solution-file", solution_file, "solution file, one id per line");
    verify->add_option("--forced", forced_spec, "forced ids the solution must respect");
    verify->add_option("--forced-file", forced_file, "forced-set file");
    verify->add_option("--pattern", pattern_path, "pattern H for kind=hcover");
    verify->add_flag("--quiet", quiet, "no output; exit 10 = valid, 11 = invalid");

    // ---- bench ----
    auto* bench = app.add_subcommand("bench", "CSV timings over an instance list");
    std::string list_path, algorithms_spec = "exact";
    int threads = 1;
    bench->add_option("--list", list_path,
                      "file with lines: <graph-file> [forced-file]")->required();
    bench->add_option("--algorithms", algorithms_spec, "comma list of algorithms");
    bench->add_option("--threads", threads, "parallel workers");

    try {
        std::vector<const char*> argv;
        argv.push_back("ext");
        for (auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return kExitOk;
        }
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    const int oracle_bound = oracle_bound_from_env();
    try {
        if (decide_vc->parsed() || decide_is->parsed()) {
            Graph g = load_graph(graph_path);
            VertexSet u = load_forced(forced_spec, forced_file, g.n());
            // Ext IS on U is Ext VC on the complement
            ExtInstance inst = decide_is->parsed()
                                   ? ExtInstance::ext_vc(g, u.complement())
                                   : ExtInstance::ext_vc(g, u);
            auto r = decide_vc_with(algorithm, inst, oracle_bound);
            if (!quiet) {
                out << "result: " << (r.yes ? "YES" : "NO") << "\n";
                if (r.certificate) {
                    if (decide_is->parsed())
                        out << "independent_set: "
                            << id_list(r.certificate->solution.complement()) << "\n";
                    else
                        print_certificate(out, *r.certificate);
                }
                if (r.stats)
                    out << "stats: nodes=" << r.stats->nodes_expanded
                        << " depth=" << r.stats->max_depth << "\n";
            }
            return finish_decision(quiet, r.yes);
        }
        if (decide_hc->parsed()) {
            Graph g = load_graph(graph_path);
            VertexSet u = load_forced(forced_spec, forced_file, g.n());
            Pattern h(load_graph(pattern_path));
            auto r = decide_ext_hcover(g, h, u, hcover_budget);
            if (!quiet) {
                out << "result: " << (r.yes ? "YES" : "NO") << "\n";
                if (r.certificate) print_certificate(out, *r.certificate);
            }
            return finish_decision(quiet, r.yes);
        }
        if (maxext_vc->parsed()) {
            Graph g = load_graph(graph_path);
            VertexSet u = load_forced(forced_spec, forced_file, g.n());
            int value = 0;
            std::optional<Certificate> cert;
            if (method == "approx-bipartite") {
                auto r = approx_bipartite(g, u);
                value = r.value;
                cert = std::move(r.certificate);
            } else if (method == "approx-degree") {
                auto r = approx_degree(g, u);
                value = r.value;
                cert = std::move(r.certificate);
            } else if (method == "oracle") {
                auto r = max_ext_vc_opt_bf(g, u, oracle_bound);
                value = r.value;
            } else if (method == "exact") {
                bool independent = true;
                u.for_each([&](int v) {
                    for (int w : g.neighbors(v)) independent &= !u.contains(w);
                });
                if (independent && chordal_peo(g)) {
                    auto r = max_ext_vc_chordal(g, u);
                    value = r.value;
                    cert = std::move(r.certificate);
                } else {
                    value = max_ext_vc_opt_bf(g, u, oracle_bound).value;
                }
            } else {
                err << "usage error: unknown method " << method << "\n";
                return kExitUsage;
            }
            if (!quiet) {
                out << "result: " << (value == u.cardinality() ? "YES" : "NO") << "\n";
                out << "value: " << value << "\n";
                if (cert) print_certificate(out, *cert);
            }
            return finish_decision(quiet, value == u.cardinality());
        }
        if (minext_is->parsed()) {
            Graph g = load_graph(graph_path);
            VertexSet u = load_forced(forced_spec, forced_file, g.n());
            int value = min_ext_is_value(g, u, oracle_bound);
            if (!quiet) {
                out << "result: " << (value == u.cardinality() ? "YES" : "NO") << "\n";
                out << "value: " << value << "\n";
            }
            return finish_decision(quiet, value == u.cardinality());
        }
        if (oracle_enum->parsed()) {
            Graph g = load_graph(graph_path);
            for (const auto& s : maximal_independent_sets(g, oracle_bound))
                out << id_list(s) << "\n";
            return kExitOk;
        }
        if (obf_vc->parsed() || obf_is->parsed()) {
            Graph g = load_graph(graph_path);
            VertexSet u = load_forced(forced_spec, forced_file, g.n());
            Decision r = obf_vc->parsed()
                             ? decide_ext_vc_bf(ExtInstance::ext_vc(g, u), oracle_bound)
                             : decide_ext_is_bf(ExtInstance::ext_is(g, u), oracle_bound);
            if (!quiet) {
                out << "result: " << (r.yes ? "YES" : "NO") << "\n";
                if (r.certificate) {
                    if (obf_is->parsed())
                        out << "independent_set: " << id_list(r.certificate->solution)
                            << "\n";
                    else
                        print_certificate(out, *r.certificate);
                }
            }
            return finish_decision(quiet, r.yes);
        }
        if (obf_hc->parsed()) {
            Graph g = load_graph(graph_path);
            VertexSet u = load_forced(forced_spec, forced_file, g.n());
            Pattern h(load_graph(pattern_path));
            bool yes = decide_ext_hcover_bf(g, h, u,
                                            std::min(oracle_bound, kDefaultHCoverOracleBound));
            if (!quiet) out << "result: " << (yes ? "YES" : "NO") << "\n";
            return finish_decision(quiet, yes);
        }
        if (oracle_opt->parsed()) {
            Graph g = load_graph(graph_path);
            VertexSet u = load_forced(forced_spec, forced_file, g.n());
            auto r = max_ext_vc_opt_bf(g, u, oracle_bound);
            if (!quiet) {
                out << "value: " << r.value << "\n";
                out << "cover: " << id_list(r.witness) << "\n";
            }
            return kExitOk;
        }
        if (gen_b2->parsed() || gen_mc->parsed() || gen_mx->parsed()) {
            GeneratedInstance gen;
            if (gen_b2->parsed()) {
                std::ifstream in(cnf_path);
                if (!in) throw FormatError("cannot open CNF file: " + cnf_path);
                gen = gen_from_b2sat(parse_cnf(in));
            } else {
                Graph g = load_graph(graph_path);
                if (gen_mc->parsed()) {
                    std::vector<VertexSet> parts;
                    std::istringstream ps(parts_spec);
                    std::string group;
                    while (std::getline(ps, group, ';'))
                        parts.push_back(parse_id_list(group, g.n()));
                    gen = gen_mcis(g, parts);
                } else {
                    gen = gen_maxis_gadget(g);
                }
            }
            std::ofstream og(out_graph_path);
            if (!og) throw FormatError("cannot write " + out_graph_path);
            write_dimacs(og, gen.instance.graph, gen.provenance);
            std::ofstream of(out_forced_path);
            if (!of) throw FormatError("cannot write " + out_forced_path);
            write_vertex_list(of, gen.instance.forced);
            out << "generated: n=" << gen.instance.graph.n()
                << " m=" << gen.instance.graph.edge_count()
                << " forced=" << gen.instance.forced.cardinality() << "\n";
            return kExitOk;
        }
        if (verify->parsed()) {
            Graph g = load_graph(graph_path);
            VertexSet sol = load_forced(solution_spec, solution_file, g.n());
            VertexSet u = load_forced(forced_spec, forced_file, g.n());
            bool valid = false;
            std::string reason;
            if (kind == "vc") {
                valid = is_minimal_vertex_cover(g, sol) && u.is_subset_of(sol);
                if (!valid) reason = "not a minimal vertex cover containing the forced set";
            } else if (kind == "is") {
                valid = is_maximal_independent_set(g, sol) &&
                        (forced_spec.empty() && forced_file.empty()
                             ? true
                             : sol.is_subset_of(u));
                if (!valid) reason = "not a maximal independent set inside the forced set";
            } else if (kind == "hcover") {
                if (pattern_path.empty()) {
                    err << "usage error: --pattern required for kind=hcover\n";
                    return kExitUsage;
                }
                Pattern h(load_graph(pattern_path));
                valid = is_minimal_h_cover(g, h, sol) && u.is_subset_of(sol);
                if (!valid) reason = "not a minimal H-cover containing the forced set";
            } else {
                err << "usage error: unknown kind " << kind << "\n";
                return kExitUsage;
            }
            if (!quiet) {
                out << "result: " << (valid ? "VALID" : "INVALID") << "\n";
                if (!valid) out << "reason: " << reason << "\n";
            }
            return finish_decision(quiet, valid);
        }
        if (bench->parsed()) {
            std::ifstream in(list_path);
            if (!in) throw FormatError("cannot open instance list: " + list_path);
            struct Job {
                std::string graph_file, forced_file;
            };
            std::vector<Job> jobs;
            std::string line;
            while (std::getline(in, line)) {
                std::istringstream ls(line);
                Job j;
                if (ls >> j.graph_file) {
                    ls >> j.forced_file;
                    jobs.push_back(j);
                }
            }
            std::vector<std::string> algos;
            std::istringstream as(algorithms_spec);
            std::string a;
            while (std::getline(as, a, ','))
                if (!a.empty()) algos.push_back(a);

            std::vector<BenchRow> rows(jobs.size() * algos.size());
            std::mutex next_mutex;
            size_t next = 0;
            auto worker = [&]() {
                for (;;) {
                    size_t i;
                    {
                        std::lock_guard<std::mutex> lk(next_mutex);
                        if (next >= rows.size()) return;
                        i = next++;
                    }
                    const Job& job = jobs[i / algos.size()];
                    const std::string& algo = algos[i % algos.size()];
                    Graph g = load_graph(job.graph_file);
                    VertexSet u = load_forced("", job.forced_file, g.n());
                    ExtInstance inst = ExtInstance::ext_vc(g, u);
                    auto t0 = std::chrono::steady_clock::now();
                    auto r = decide_vc_with(algo, inst, oracle_bound_from_env());
                    auto t1 = std::chrono::steady_clock::now();
                    BenchRow row;
                    row.instance = job.graph_file;
                    row.n = g.n();
                    row.m = g.edge_count();
                    row.u = u.cardinality();
                    row.algorithm = algo;
                    row.yes = r.yes;
                    row.nodes = r.stats ? r.stats->nodes_expanded : 0;
                    row.micros = std::chrono::duration_cast<std::chrono::microseconds>(
                                     t1 - t0)
                                     .count();
                    rows[i] = std::move(row);
                }
            };
            int nthreads = std::max(1, threads);
            std::vector<std::thread> pool;
            for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
            worker();
            for (auto& t : pool) t.join();

            out << "instance,n,m,|U|,algorithm,decision,nodes,micros\n";
            for (const auto& row : rows)
                out << row.instance << "," << row.n << "," << row.m << "," << row.u << ","
                    << row.algorithm << "," << (row.yes ? "YES" : "NO") << "," << row.nodes
                    << "," << row.micros << "\n";
            return kExitOk;
        }
        err << "usage error: no subcommand selected\n";
        return kExitUsage;
    } catch (const FormatError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitFile;
    } catch (const BoundExceeded& e) {
        err << "refused: " << e.what() << "\n";
        return kExitRefused;
    } catch (const Unsupported& e) {
        err << "refused: " << e.what() << "\n";
        return kExitRefused;
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << "\n";
        return kExitFile;
    }
}

}  // namespace extcover
