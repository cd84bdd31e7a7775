#pragma once

#include <random>
#include <vector>

#include "cospec/exact.hpp"
#include "cospec/graph.hpp"

namespace cospec::testing {

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);  // 0-1-2-...-(n-1)
Graph cycle_graph(int n);
Graph star_graph(int leaves); // K_{1,leaves}, center = 0
Graph disjoint_union(const Graph& a, const Graph& b);

Graph random_graph(std::mt19937& rng, int n);
std::vector<int> random_permutation(std::mt19937& rng, int n);
RatMatrix random_rational_matrix(std::mt19937& rng, int rows, int cols);
BitVec random_bits(std::mt19937& rng, int n);

} // namespace cospec::testing
