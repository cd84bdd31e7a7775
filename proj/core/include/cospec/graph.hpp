#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace cospec {

// 0/1 vector; neighborhood indicators and overgraph attachments.
using BitVec = std::vector<std::uint8_t>;

BitVec zero_bits(int n);
BitVec ones_bits(int n);

// Labeled simple graph on up to 64 vertices. Adjacency is kept as one
// 64-bit row per vertex; symmetric, zero diagonal.
class Graph {
public:
    static constexpr int kMaxVertices = 64;

    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    bool edge(int i, int j) const { return (rows_[static_cast<std::size_t>(i)] >> j) & 1u; }
    std::uint64_t row_bits(int i) const { return rows_[static_cast<std::size_t>(i)]; }
    int edge_count() const;
    int degree(int v) const;

    void set_edge(int i, int j, bool present);
    void add_edge(int i, int j) { set_edge(i, j, true); }

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> rows_;
};

// Total order on (order, bitrows); used for sorted decks and catalogs.
bool operator<(const Graph& a, const Graph& b);

struct RootedGraph {
    Graph graph;
    int root = 0; // in [0, graph.order())
};

Graph complement(const Graph& g);
Graph delete_vertex(const Graph& g, int v);

// Adds one vertex (index n) adjacent to {i : b[i] = 1}; dim(b) must equal n.
Graph overgraph(const Graph& g, const BitVec& b);

// Inverse of overgraph up to the root-last relabeling: returns
// (g - root, neighborhood indicator of the root in the remaining labeling).
std::pair<Graph, BitVec> split_root(const RootedGraph& rg);

// Relabels so the root becomes the last vertex, keeping the others in order.
Graph relabel_root_last(const RootedGraph& rg);

// result.edge(i, j) = g.edge(p[i], p[j]); p maps new labels to old ones.
Graph permuted(const Graph& g, const std::vector<int>& p);

// Upper-triangle bits packed row-major with pair (0,1) most significant, so
// unsigned comparison equals lexicographic comparison of the bitstring.
// Requires n <= 11.
std::uint64_t upper_bits(const Graph& g);
Graph from_upper_bits(int n, std::uint64_t bits);

// Lexicographically minimal relabeling over all n! permutations (n <= 10).
// canonical_form(g) == canonical_form(h) iff g and h are isomorphic.
Graph canonical_form(const Graph& g);

// Canonical form of a rooted graph: root pinned last, minimized over the
// remaining (n-1)! relabelings. Equal iff rooted-isomorphic.
std::uint64_t rooted_canonical_bits(const RootedGraph& rg);

// Multiset of canonical vertex-deleted subgraphs, sorted; one card per vertex.
std::vector<Graph> deck(const Graph& g);

} // namespace cospec
