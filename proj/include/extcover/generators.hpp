#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "extcover/instance.hpp"

namespace extcover {

// 3-CNF where every variable occurs exactly twice positively and twice
// negatively and no clause repeats a variable.
struct B2SatFormula {
    int variables = 0;
    // literal: variable index 0-based, sign +1 / -1
    std::vector<std::array<int, 3>> clauses;  // encoded ±(var+1)

    int clause_count() const { return static_cast<int>(clauses.size()); }
};

// DIMACS CNF with validation of the (3,B2) occurrence profile; occurrence
// violations are reported per variable.
B2SatFormula parse_cnf(std::istream& in);
B2SatFormula parse_cnf(const std::string& text);
void write_cnf(std::ostream& out, const B2SatFormula& f);

// Exhaustive satisfiability check, bounded.
bool sat_bf(const B2SatFormula& f, int max_variables = 24);

struct GeneratedInstance {
    ExtInstance instance;
    std::vector<std::string> provenance;  // comment block for emitted files
};

// Cubic bipartite Ext VC instance on 10n + 2m vertices, YES iff the
// formula is satisfiable: two mirrored copies of the clause-variable
// incidence structure joined through per-variable paths x-l-m-r-¬x, with
// the clause vertices and the path midpoints forced.
GeneratedInstance gen_from_b2sat(const B2SatFormula& f);

// Bipartite instance with two mirrored vertex copies and one forced pair
// per part; YES iff g has an independent set with one vertex per part.
// Parts must have size >= 2 and are completed to cliques internally.
GeneratedInstance gen_mcis(const Graph& g, const std::vector<VertexSet>& parts);

// Pendant-copy graph on 2n vertices with the copies forced; the optimal
// Max Ext VC value equals the independence number of g.
GeneratedInstance gen_maxis_gadget(const Graph& g);

}  // namespace extcover
