#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace extcover {

using Edge = std::pair<int, int>;

// Membership over vertices 0..n-1 with bitset semantics.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : n_(universe), bits_((universe + 63) / 64, 0) {}

    static VertexSet of(int universe, std::initializer_list<int> members);
    static VertexSet from_vector(int universe, const std::vector<int>& members);
    static VertexSet full(int universe);

    int universe() const { return n_; }
    int cardinality() const { return count_; }
    bool empty() const { return count_ == 0; }

    bool contains(int v) const {
        return v >= 0 && v < n_ && (bits_[v >> 6] >> (v & 63) & 1u) != 0;
    }
    void add(int v);
    void remove(int v);

    VertexSet set_union(const VertexSet& other) const;
    VertexSet set_intersection(const VertexSet& other) const;
    VertexSet set_minus(const VertexSet& other) const;
    VertexSet complement() const;
    bool is_subset_of(const VertexSet& other) const;
    bool intersects(const VertexSet& other) const;

    std::vector<int> to_vector() const;
    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (size_t w = 0; w < bits_.size(); ++w) {
            uint64_t word = bits_[w];
            while (word) {
                int v = static_cast<int>(w * 64) + __builtin_ctzll(word);
                fn(v);
                word &= word - 1;
            }
        }
    }

    bool operator==(const VertexSet& other) const = default;

private:
    int n_ = 0;
    std::vector<uint64_t> bits_;
    int count_ = 0;
};

// Immutable simple undirected graph over vertex ids 0..n-1 with sorted
// neighbor lists.
class Graph {
public:
    Graph() = default;
    // Duplicate edges collapse; self-loops are rejected.
    Graph(int n, std::vector<Edge> edges);

    int n() const { return n_; }
    int edge_count() const { return m_; }
    std::span<const int> neighbors(int v) const {
        return {adj_list_.data() + adj_ptr_[v], adj_list_.data() + adj_ptr_[v + 1]};
    }
    int degree(int v) const { return adj_ptr_[v + 1] - adj_ptr_[v]; }
    int max_degree() const;
    bool has_edge(int u, int v) const;
    std::vector<Edge> edges() const;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<int> adj_ptr_ = {0};
    std::vector<int> adj_list_;
};

struct Classification {
    std::optional<std::pair<VertexSet, VertexSet>> bipartition;
    bool is_forest = false;
    int max_degree = 0;
    std::vector<VertexSet> components;
};

// N_G[U] = U together with every neighbor of U.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& u);
VertexSet open_neighborhood(const Graph& g, const VertexSet& u);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_original;  // new id -> old id
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& w);

Classification classify(const Graph& g);

// Proper coloring along `order`; uses at most max_degree+1 colors.
std::vector<int> greedy_coloring(const Graph& g, const std::vector<int>& order);

// DIMACS edge format ("c" comments, "p edge n m", "e u v", 1-based).
Graph parse_dimacs(std::istream& in);
Graph parse_dimacs(const std::string& text);
void write_dimacs(std::ostream& out, const Graph& g,
                  const std::vector<std::string>& comments = {});
std::string write_dimacs(const Graph& g, const std::vector<std::string>& comments = {});

// Forced-set file: one 1-based vertex id per line.
VertexSet parse_vertex_list(std::istream& in, int n);
void write_vertex_list(std::ostream& out, const VertexSet& s);

// Malformed input files and violated preconditions.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace extcover
