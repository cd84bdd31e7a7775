#pragma once

#include <vector>

#include "cospec/errors.hpp"
#include "cospec/graph.hpp"
#include "cospec/spectral.hpp"

namespace cospec {

struct ToleranceConfig {
    double gram = 1e-6;       // construction-time frame agreement
    double accept = 1e-7;     // certificate residual acceptance
    double degenerate = 1e-9; // near-zero / near-dependent vector cutoff
};

struct OrthogonalCertificate {
    RealMatrix q;
    double residual_orth = 0.0; // max|Q^T Q - I|
    double residual_conj = 0.0; // max|Q^T A(G) Q - A(H)|
    double residual_e = 0.0;    // max|Q^T e - e|
    double residual_b = 0.0;    // max|Q^T b - c|
    bool has_bc = false;
    bool verified = false;
};

struct BlockCertificate {
    OrthogonalCertificate inner; // (n-1) x (n-1) block
    RealMatrix full;             // diag(Q, 1)
    double residual_orth = 0.0;
    double residual_conj = 0.0;
    double residual_e = 0.0;
    bool verified = false;
};

// Orthogonal k x k matrix mapping x1 -> y1 and x2 -> y2, given matching Gram
// data; built as V U^T from Gram-Schmidt extensions of the two frames.
RealMatrix align_frames(const std::vector<double>& x1, const std::vector<double>& x2,
                        const std::vector<double>& y1, const std::vector<double>& y2, int k,
                        const ToleranceConfig& tol = {});

// Regular orthogonal conjugation witness: Q^T A(g) Q = A(h), Q^T e = e,
// Q^T b = c. Requires (g, h) and (g+b, h+c) generalized cospectral (checked
// exactly first; throws precondition_error otherwise).
OrthogonalCertificate construct_q(const Graph& g, const Graph& h, const BitVec& b, const BitVec& c,
                                  const ToleranceConfig& tol = {});

// Bordered construction for rooted pairs: inner Q on the root-deleted
// graphs, full = diag(Q, 1) conjugating the root-last relabelings.
BlockCertificate construct_block_q(const RootedGraph& rg, const RootedGraph& rh,
                                   const ToleranceConfig& tol = {});

// Recomputes every residual of cert.q from scratch against the given data;
// true iff all residuals <= accept_tol and rounding Q^T a_g Q entrywise to
// the nearest integer reproduces a_h exactly.
bool verify_certificate(const OrthogonalCertificate& cert, const RealMatrix& a_g, const RealMatrix& a_h,
                        const std::vector<double>* b, const std::vector<double>* c, double accept_tol = 1e-7);

bool verify_block_certificate(const BlockCertificate& cert, const RootedGraph& rg, const RootedGraph& rh,
                              double accept_tol = 1e-7);

} // namespace cospec
