#include "test_support.hpp"

#include <numeric>

namespace cospec::testing {

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.order() + b.order());
    for (int i = 0; i < a.order(); ++i)
        for (int j = i + 1; j < a.order(); ++j)
            if (a.edge(i, j)) g.add_edge(i, j);
    for (int i = 0; i < b.order(); ++i)
        for (int j = i + 1; j < b.order(); ++j)
            if (b.edge(i, j)) g.add_edge(a.order() + i, a.order() + j);
    return g;
}

Graph random_graph(std::mt19937& rng, int n) {
    Graph g(n);
    std::bernoulli_distribution coin(0.5);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) g.add_edge(i, j);
    return g;
}

std::vector<int> random_permutation(std::mt19937& rng, int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

RatMatrix random_rational_matrix(std::mt19937& rng, int rows, int cols) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    RatMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = make_rational(num(rng), den(rng));
    return m;
}

BitVec random_bits(std::mt19937& rng, int n) {
    std::bernoulli_distribution coin(0.5);
    BitVec b(static_cast<std::size_t>(n));
    for (auto& v : b) v = coin(rng) ? 1 : 0;
    return b;
}

} // namespace cospec::testing
