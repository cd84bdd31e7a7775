#pragma once

#include <vector>

#include "cospec/exact.hpp"
#include "cospec/graph.hpp"

namespace cospec {

// Small dense double matrix, row-major.
struct RealMatrix {
    int rows = 0, cols = 0;
    std::vector<double> a;

    RealMatrix() = default;
    RealMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * static_cast<std::size_t>(c)) {}

    double& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    double operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    static RealMatrix identity(int n);
    static RealMatrix adjacency(const Graph& g);
};

RealMatrix matmul(const RealMatrix& a, const RealMatrix& b);
RealMatrix transpose(const RealMatrix& m);
RealMatrix matsub(const RealMatrix& a, const RealMatrix& b);
double max_abs(const RealMatrix& m);
std::vector<double> matvec(const RealMatrix& m, const std::vector<double>& v);

// One cluster of numerically equal eigenvalues with an orthonormal basis of
// the summed eigenspace (n x mult column block).
struct EigenCluster {
    double lambda;
    int mult;
    RealMatrix basis;
};

struct SpectralDecomp {
    int n = 0;
    std::vector<EigenCluster> clusters; // representatives strictly increasing
};

// Cyclic Jacobi on a symmetric matrix; eigenvalues clustered by the gap rule
// (new cluster when the gap exceeds 1e-7 * max(1, max|A|)). conv_tol scales
// the Frobenius norm to the off-diagonal convergence threshold; 100 sweeps max.
SpectralDecomp eigendecompose(const RealMatrix& a, double conv_tol = 1e-12);

// Per-cluster (||P_i^T b||^2, ||P_i^T e||^2, <P_i^T b, P_i^T e>).
struct SpectralProfile {
    std::vector<double> beta, mu, gamma;
};

SpectralProfile spectral_profile(const SpectralDecomp& d, const std::vector<double>& b);
SpectralProfile spectral_profile(const SpectralDecomp& d, const BitVec& b);

// Ascending-coefficient double polynomials.
namespace rpoly {
std::vector<double> add(const std::vector<double>& a, const std::vector<double>& b);
std::vector<double> scale(const std::vector<double>& a, double s);
std::vector<double> mul(const std::vector<double>& a, const std::vector<double>& b);
std::vector<double> shift_up(const std::vector<double>& a, int k); // a * x^k
// Quotient of a by (x - root); the remainder a(root) is dropped.
std::vector<double> synthetic_quotient(const std::vector<double>& a, double root);
// a(-x-1)
std::vector<double> compose_neg_shift(const std::vector<double>& a);
double eval(const std::vector<double>& a, double x);
} // namespace rpoly

std::vector<double> to_real(const IntPoly& p);

// chi(G+b; x) from the eigendata of A(G) and the exact chi(G; x):
// x*chi - sum_i beta_i * chi/(x - lambda_i), each quotient by synthetic division.
std::vector<double> charpoly_overgraph_spectral(const SpectralDecomp& d, const BitVec& b, const IntPoly& chi);

// chi(complement(G); x) = (-1)^n chi(G; -x-1) (1 - sum_i mu_i / (x+1+lambda_i)).
std::vector<double> charpoly_complement_spectral(const SpectralDecomp& d, const IntPoly& chi);

// chi of (G+b)+e via the 2x2 determinant in the cluster quantities
// (beta_i, mu_i, gamma_i); degree n+2.
std::vector<double> charpoly_double_overgraph_spectral(const SpectralDecomp& d, const SpectralProfile& profile,
                                                       const IntPoly& chi);

} // namespace cospec
