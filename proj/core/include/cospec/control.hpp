#pragma once

#include <string>
#include <vector>

#include "cospec/errors.hpp"
#include "cospec/exact.hpp"
#include "cospec/graph.hpp"

namespace cospec {

struct WalkMatrixData {
    RatMatrix w; // [e, Ae, ..., A^{n-1}e], exact integer entries
    int rank = 0;
};

WalkMatrixData walk_matrix(const Graph& g);

// Equals rank W(G).
int main_eigenvalue_count(const Graph& g);

enum class Controllability { controllable, almost_controllable, neither };

std::string to_string(Controllability c);

Controllability classify_controllability(const Graph& g);

// I - 2 xi xi^T / (xi^T xi) for the integral kernel vector xi of W(G)^T.
RatMatrix regular_householder(const std::vector<BigInt>& xi);

struct Q0Certificate {
    std::vector<BigInt> xi; // gcd 1, first nonzero entry positive
    RatMatrix q0;
    bool is_permutation = false; // exact: every entry in {0, 1}

    // "Hs" when q0 is a permutation matrix, else "Ha".
    std::string symmetry_class() const { return is_permutation ? "Hs" : "Ha"; }
};

// Requires an almost controllable graph (throws precondition_error
// otherwise). The returned matrix is checked exactly at construction:
// Q0^2 = I, Q0 e = e, Q0^T A Q0 = A.
Q0Certificate compute_q0(const Graph& g);

// All vertex permutations p with A(g) invariant (the automorphism group,
// enumerated exactly); p maps new labels to old, n <= 10.
std::vector<std::vector<int>> permutation_solutions(const Graph& g);

enum class ReconClause { hs, ha_q0b_excluded, controllable_card, none };

std::string to_string(ReconClause c);

struct ReconstructibilityCertificate {
    bool certified = false;
    int witness_vertex = -1;
    ReconClause clause = ReconClause::none;
    std::vector<BigInt> xi;       // when the witness card is almost controllable
    std::vector<Rational> q0_b;   // when clause ha_q0b_excluded was evaluated
    BitVec b;                     // neighborhood indicator of the witness vertex
};

// Scans vertices in ascending order; the first card that is controllable,
// in Hs, or in Ha with Q0 b outside {0,1}^{n-1} \ {b} certifies. Requires
// n >= 3.
ReconstructibilityCertificate reconstructibility_certificate(const Graph& g);

} // namespace cospec
