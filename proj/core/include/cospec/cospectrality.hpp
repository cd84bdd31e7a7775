#pragma once

#include <string>
#include <vector>

#include "cospec/exact.hpp"
#include "cospec/graph.hpp"

namespace cospec {

// Exact decisions only: every predicate below compares integer
// characteristic polynomials; no floating point is involved.

bool is_cospectral(const Graph& g, const Graph& h);

// Cospectral with cospectral complements.
bool is_generalized_cospectral(const Graph& g, const Graph& h);

// Equivalent route: cospectral and with cospectral cones G+e, H+e.
bool is_generalized_cospectral_via_cone(const Graph& g, const Graph& h);

enum class CospecLevel { not_cospectral, cospectral, generalized_cospectral };

std::string to_string(CospecLevel level);

struct LabeledPoly {
    std::string label;
    IntPoly poly;
};

struct CospectralityReport {
    CospecLevel level = CospecLevel::not_cospectral;
    bool has_roots = false;
    bool rooted_generalized = false;
    std::vector<LabeledPoly> witness_polys;
};

// Plain/generalized comparison with the four witness polynomials.
CospectralityReport compare_graphs(const Graph& g, const Graph& h);

// Rooted comparison: rooted_generalized iff (G, H) and (G - root, H - root)
// are both generalized cospectral; carries all eight witness polynomials.
CospectralityReport is_rooted_generalized_cospectral(const RootedGraph& rg, const RootedGraph& rh);

} // namespace cospec
