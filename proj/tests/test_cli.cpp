#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <random>
#include <fstream>
#include <sstream>

#include "extcover/cli.hpp"
#include "extcover/graph.hpp"
#include "support.hpp"

using namespace extcover;
using namespace testsupport;

namespace {

struct CliRun {
    int exit_code;
    std::string out, err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content)
        : path("/tmp/extcover_test_" + name) {
        std::ofstream f(path);
        f << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("decide vc through the cli") {
    TempFile p3("p3.col", write_dimacs(path(3)));
    auto r = run({"decide", "vc", "--graph", p3.path, "--forced", "1"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("result: YES") == 0);
    CHECK(r.out.find("cover: 1,3") != std::string::npos);
    CHECK(r.out.find("witness: 1->1,2") != std::string::npos);

    TempFile p4("p4.col", write_dimacs(path(4)));
    auto no = run({"decide", "vc", "--graph", p4.path, "--forced", "1,4",
                   "--algorithm", "tree"});
    CHECK(no.exit_code == 0);
    CHECK(no.out.find("result: NO") == 0);

    // quiet exits
    CHECK(run({"decide", "vc", "--graph", p3.path, "--forced", "1", "--quiet"}).exit_code ==
          10);
    CHECK(run({"decide", "vc", "--graph", p4.path, "--forced", "1,4", "--quiet"})
              .exit_code == 11);

    // all algorithms agree here
    for (std::string algo : {"auto", "tree", "chordal", "fpt", "exact", "oracle"}) {
        auto res = run({"decide", "vc", "--graph", p3.path, "--forced", "1",
                        "--algorithm", algo});
        CHECK(res.exit_code == 0);
        CHECK(res.out.find("result: YES") == 0);
    }
}

TEST_CASE("decide is through the cli") {
    TempFile p3("p3is.col", write_dimacs(path(3)));
    auto yes = run({"decide", "is", "--graph", p3.path, "--forced", "1,3"});
    CHECK(yes.out.find("result: YES") == 0);
    CHECK(yes.out.find("independent_set: 1,3") != std::string::npos);
    auto no = run({"decide", "is", "--graph", p3.path, "--forced", "1"});
    CHECK(no.out.find("result: NO") == 0);
}

TEST_CASE("decide hcover through the cli") {
    TempFile k4("k4.col", write_dimacs(complete(4)));
    TempFile k3("k3.col", write_dimacs(complete(3)));
    auto r = run({"decide", "hcover", "--graph", k4.path, "--pattern", k3.path,
                  "--forced", "1"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("result: YES") == 0);
}

TEST_CASE("maxext and minext through the cli") {
    TempFile star6("star6.col", write_dimacs(star(5)));
    TempFile leaves("leaves.txt", "2\n3\n4\n5\n6\n");
    auto r = run({"maxext", "vc", "--graph", star6.path, "--forced-file", leaves.path,
                  "--method", "approx-degree"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("value: 5") != std::string::npos);

    auto exact = run({"maxext", "vc", "--graph", star6.path, "--forced-file", leaves.path});
    CHECK(exact.out.find("value: 5") != std::string::npos);

    TempFile p3("p3max.col", write_dimacs(path(3)));
    auto mini = run({"minext", "is", "--graph", p3.path, "--forced", "2"});
    CHECK(mini.exit_code == 0);
    CHECK(mini.out.find("value: 1") != std::string::npos);
}

TEST_CASE("oracle subcommands") {
    TempFile p3("p3o.col", write_dimacs(path(3)));
    auto en = run({"oracle", "enumerate", "--graph", p3.path});
    CHECK(en.out == "1,3\n2\n");
    auto de = run({"oracle", "decide", "vc", "--graph", p3.path, "--forced", "1"});
    CHECK(de.out.find("result: YES") == 0);
    auto opt = run({"oracle", "opt", "--graph", p3.path, "--forced", "1,3"});
    CHECK(opt.out.find("value: 2") == 0);
}

TEST_CASE("generate subcommands") {
    TempFile cnf("f.cnf", "p cnf 3 4\n1 2 3 0\n1 2 3 0\n-1 -2 -3 0\n-1 -2 -3 0\n");
    std::string graph_out = "/tmp/extcover_test_gen.col";
    std::string forced_out = "/tmp/extcover_test_gen.u";
    auto r = run({"generate", "b2sat", "--cnf", cnf.path, "--out-graph", graph_out,
                  "--out-forced", forced_out});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("generated: n=38") == 0);
    std::ifstream g(graph_out);
    Graph parsed = parse_dimacs(g);
    CHECK(parsed.n() == 38);
    CHECK(parsed.max_degree() == 3);
    std::ifstream fu(forced_out);
    CHECK(parse_vertex_list(fu, 38).cardinality() == 14);

    auto dec = run({"decide", "vc", "--graph", graph_out, "--forced-file", forced_out,
                    "--algorithm", "exact"});
    CHECK(dec.out.find("result: YES") == 0);  // the sample formula is satisfiable

    std::remove(graph_out.c_str());
    std::remove(forced_out.c_str());
}

TEST_CASE("verify subcommand") {
    TempFile p3("p3v.col", write_dimacs(path(3)));
    auto ok = run({"verify", "--graph", p3.path, "--kind", "vc", "--solution", "2"});
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("result: VALID") == 0);
    auto bad = run({"verify", "--graph", p3.path, "--kind", "vc", "--solution", "1,2"});
    CHECK(bad.out.find("result: INVALID") == 0);
    auto is_ok = run({"verify", "--graph", p3.path, "--kind", "is", "--solution", "1,3"});
    CHECK(is_ok.out.find("result: VALID") == 0);
}

TEST_CASE("bench subcommand") {
    TempFile p3("p3b.col", write_dimacs(path(3)));
    TempFile u("p3b.u", "1\n");
    TempFile list("bench.list", p3.path + " " + u.path + "\n");
    auto r = run({"bench", "--list", list.path, "--algorithms", "fpt,exact",
                  "--threads", "2"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("instance,n,m,|U|,algorithm,decision,nodes,micros\n") == 0);
    CHECK(r.out.find(",3,2,1,fpt,YES,") != std::string::npos);
    CHECK(r.out.find(",3,2,1,exact,YES,") != std::string::npos);
}

TEST_CASE("oracle bound override via environment") {
    TempFile big("big25.col", write_dimacs(testsupport::cycle(25)));
    CHECK(run({"oracle", "decide", "vc", "--graph", big.path}).exit_code == 4);
    setenv("EXT_ORACLE_BOUND", "26", 1);
    auto r = run({"oracle", "decide", "vc", "--graph", big.path, "--forced", "1"});
    unsetenv("EXT_ORACLE_BOUND");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("result: YES") == 0);
}

TEST_CASE("auto dispatch agrees with the oracle") {
    std::mt19937 rng(1717);
    for (int round = 0; round < 30; ++round) {
        int n = 4 + round % 7;
        Graph g = (round % 3 == 0)   ? random_tree(n, rng)
                  : (round % 3 == 1) ? gnp(n, 0.5, rng)
                                     : cycle(n);
        VertexSet u = random_subset(n, 0.4, rng);
        TempFile gf("auto.col", write_dimacs(g));
        std::ostringstream forced;
        u.for_each([&](int v) { forced << v + 1 << "\n"; });
        TempFile uf("auto.u", forced.str());
        auto solved = run({"decide", "vc", "--graph", gf.path, "--forced-file", uf.path,
                           "--quiet"});
        auto oracle = run({"oracle", "decide", "vc", "--graph", gf.path, "--forced-file",
                           uf.path, "--quiet"});
        CHECK(solved.exit_code == oracle.exit_code);
    }
}

TEST_CASE("error exit codes") {
    auto usage = run({"decide", "vc"});
    CHECK(usage.exit_code == 2);
    auto missing = run({"decide", "vc", "--graph", "/tmp/does_not_exist.col"});
    CHECK(missing.exit_code == 3);
    TempFile bad("bad.col", "p edge 2 1\ne 1 1\n");
    CHECK(run({"decide", "vc", "--graph", bad.path}).exit_code == 3);
    TempFile big("big.col", write_dimacs(testsupport::cycle(25)));
    CHECK(run({"oracle", "decide", "vc", "--graph", big.path}).exit_code == 4);
}
