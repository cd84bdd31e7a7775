#include "cospec/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cospec {

BitVec zero_bits(int n) { return BitVec(static_cast<std::size_t>(n), 0); }
BitVec ones_bits(int n) { return BitVec(static_cast<std::size_t>(n), 1); }

Graph::Graph(int n) : n_(n), rows_(static_cast<std::size_t>(n), 0) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("graph order must be in [0, 64], got " + std::to_string(n));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [i, j] : edges) g.add_edge(i, j);
    return g;
}

int Graph::edge_count() const {
    int twice = 0;
    for (int i = 0; i < n_; ++i) twice += std::popcount(rows_[static_cast<std::size_t>(i)]);
    return twice / 2;
}

int Graph::degree(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
    return std::popcount(rows_[static_cast<std::size_t>(v)]);
}

void Graph::set_edge(int i, int j, bool present) {
    if (i < 0 || i >= n_ || j < 0 || j >= n_) throw std::out_of_range("vertex index out of range");
    if (i == j) throw std::invalid_argument("loops are not allowed");
    auto bi = static_cast<std::size_t>(i), bj = static_cast<std::size_t>(j);
    if (present) {
        rows_[bi] |= std::uint64_t{1} << j;
        rows_[bj] |= std::uint64_t{1} << i;
    } else {
        rows_[bi] &= ~(std::uint64_t{1} << j);
        rows_[bj] &= ~(std::uint64_t{1} << i);
    }
}

bool operator<(const Graph& a, const Graph& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    for (int i = 0; i < a.order(); ++i)
        if (a.row_bits(i) != b.row_bits(i)) return a.row_bits(i) < b.row_bits(i);
    return false;
}

Graph complement(const Graph& g) {
    const int n = g.order();
    Graph c(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!g.edge(i, j)) c.add_edge(i, j);
    return c;
}

Graph delete_vertex(const Graph& g, int v) {
    const int n = g.order();
    if (v < 0 || v >= n) throw std::out_of_range("delete_vertex: index out of range");
    Graph r(n - 1);
    for (int i = 0; i < n; ++i) {
        if (i == v) continue;
        for (int j = i + 1; j < n; ++j) {
            if (j == v) continue;
            if (g.edge(i, j)) r.add_edge(i - (i > v), j - (j > v));
        }
    }
    return r;
}

Graph overgraph(const Graph& g, const BitVec& b) {
    const int n = g.order();
    if (static_cast<int>(b.size()) != n)
        throw std::invalid_argument("overgraph: attachment vector dimension mismatch");
    Graph r(n + 1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.edge(i, j)) r.add_edge(i, j);
    for (int i = 0; i < n; ++i) {
        if (b[static_cast<std::size_t>(i)] > 1)
            throw std::invalid_argument("overgraph: attachment vector must be 0/1");
        if (b[static_cast<std::size_t>(i)]) r.add_edge(i, n);
    }
    return r;
}

std::pair<Graph, BitVec> split_root(const RootedGraph& rg) {
    const int n = rg.graph.order();
    if (n < 1) throw std::invalid_argument("split_root: empty graph");
    if (rg.root < 0 || rg.root >= n) throw std::out_of_range("split_root: root out of range");
    Graph rest = delete_vertex(rg.graph, rg.root);
    BitVec b = zero_bits(n - 1);
    for (int i = 0; i < n; ++i) {
        if (i == rg.root) continue;
        if (rg.graph.edge(rg.root, i)) b[static_cast<std::size_t>(i - (i > rg.root))] = 1;
    }
    return {std::move(rest), std::move(b)};
}

Graph relabel_root_last(const RootedGraph& rg) {
    auto [rest, b] = split_root(rg);
    return overgraph(rest, b);
}

Graph permuted(const Graph& g, const std::vector<int>& p) {
    const int n = g.order();
    if (static_cast<int>(p.size()) != n) throw std::invalid_argument("permuted: wrong permutation size");
    Graph r(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.edge(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)])) r.add_edge(i, j);
    return r;
}

std::uint64_t upper_bits(const Graph& g) {
    const int n = g.order();
    if (n > 11) throw std::invalid_argument("upper_bits: order must be <= 11");
    const int m = n * (n - 1) / 2;
    std::uint64_t bits = 0;
    int k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++k)
            if (g.edge(i, j)) bits |= std::uint64_t{1} << (m - 1 - k);
    return bits;
}

Graph from_upper_bits(int n, std::uint64_t bits) {
    if (n > 11) throw std::invalid_argument("from_upper_bits: order must be <= 11");
    const int m = n * (n - 1) / 2;
    Graph g(n);
    int k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++k)
            if ((bits >> (m - 1 - k)) & 1u) g.add_edge(i, j);
    return g;
}

namespace {

std::uint64_t packed_under(const Graph& g, const std::vector<int>& p) {
    const int n = g.order();
    const int m = n * (n - 1) / 2;
    std::uint64_t bits = 0;
    int k = 0;
    for (int i = 0; i < n; ++i) {
        const int pi = p[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j, ++k)
            if (g.edge(pi, p[static_cast<std::size_t>(j)])) bits |= std::uint64_t{1} << (m - 1 - k);
    }
    return bits;
}

} // namespace

Graph canonical_form(const Graph& g) {
    const int n = g.order();
    if (n > 10) throw std::invalid_argument("canonical_form: brute force capped at n <= 10");
    if (n <= 1) return g;
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        best = std::min(best, packed_under(g, p));
    } while (std::next_permutation(p.begin(), p.end()));
    return from_upper_bits(n, best);
}

std::uint64_t rooted_canonical_bits(const RootedGraph& rg) {
    const Graph fixed = relabel_root_last(rg);
    const int n = fixed.order();
    if (n > 10) throw std::invalid_argument("rooted_canonical_bits: brute force capped at n <= 10");
    if (n <= 1) return 0;
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        best = std::min(best, packed_under(fixed, p));
    } while (std::next_permutation(p.begin(), p.end() - 1)); // root stays last
    return best;
}

std::vector<Graph> deck(const Graph& g) {
    const int n = g.order();
    if (n < 1) throw std::invalid_argument("deck: empty graph");
    std::vector<Graph> cards;
    cards.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) cards.push_back(canonical_form(delete_vertex(g, v)));
    std::sort(cards.begin(), cards.end());
    return cards;
}

} // namespace cospec
