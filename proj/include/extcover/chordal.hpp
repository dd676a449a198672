#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "extcover/graph.hpp"

namespace extcover {

// Lex-BFS visit order (first visited first).
std::vector<int> lex_bfs(const Graph& g);

// True iff `order` (first eliminated first) is a perfect elimination
// ordering: the later neighbors of each vertex form a clique.
bool verify_peo(const Graph& g, const std::vector<int>& order);

// A PEO iff g is chordal, otherwise nullopt. Lex-BFS followed by explicit
// verification of the reversed visit order.
std::optional<std::vector<int>> chordal_peo(const Graph& g);

// Intersection graph of n random intervals, deterministic per seed.
// Interval lengths scale as n^{-1/2} so clique sizes grow slowly.
Graph random_interval_graph(int n, uint64_t seed);

}  // namespace extcover
