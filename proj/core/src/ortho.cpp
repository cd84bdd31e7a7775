#include "cospec/ortho.hpp"

#include <cmath>
#include <string>

#include "cospec/cospectrality.hpp"

namespace cospec {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

// Orthogonalizes v against the columns collected so far (twice, for
// stability); returns false when the residual is below the cutoff.
bool gs_append(std::vector<std::vector<double>>& basis, std::vector<double> v, double cutoff) {
    for (int pass = 0; pass < 2; ++pass)
        for (const auto& u : basis) {
            const double c = dot(u, v);
            for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * u[i];
        }
    const double r = norm(v);
    if (r <= cutoff) return false;
    for (double& x : v) x /= r;
    basis.push_back(std::move(v));
    return true;
}

std::vector<double> to_double(const BitVec& b) {
    std::vector<double> r(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = b[i] ? 1.0 : 0.0;
    return r;
}

RealMatrix columns_to_matrix(const std::vector<std::vector<double>>& cols, int k) {
    RealMatrix m(k, k);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < k; ++i) m(i, j) = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    return m;
}

double vec_residual(const std::vector<double>& a, const std::vector<double>& b) {
    double r = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) r = std::max(r, std::abs(a[i] - b[i]));
    return r;
}

bool rounds_to(const RealMatrix& m, const RealMatrix& target) {
    if (m.rows != target.rows || m.cols != target.cols) return false;
    for (std::size_t i = 0; i < m.a.size(); ++i)
        if (std::llround(m.a[i]) != std::llround(target.a[i])) return false;
    return true;
}

void fill_residuals(OrthogonalCertificate& cert, const RealMatrix& ag, const RealMatrix& ah,
                    const std::vector<double>* b, const std::vector<double>* c) {
    const int n = cert.q.rows;
    const RealMatrix qt = transpose(cert.q);
    cert.residual_orth = max_abs(matsub(matmul(qt, cert.q), RealMatrix::identity(n)));
    cert.residual_conj = max_abs(matsub(matmul(matmul(qt, ag), cert.q), ah));
    const std::vector<double> e(static_cast<std::size_t>(n), 1.0);
    cert.residual_e = vec_residual(matvec(qt, e), e);
    if (b && c) {
        cert.has_bc = true;
        cert.residual_b = vec_residual(matvec(qt, *b), *c);
    }
}

} // namespace

RealMatrix align_frames(const std::vector<double>& x1, const std::vector<double>& x2,
                        const std::vector<double>& y1, const std::vector<double>& y2, int k,
                        const ToleranceConfig& tol) {
    if (static_cast<int>(x1.size()) != k || static_cast<int>(x2.size()) != k ||
        static_cast<int>(y1.size()) != k || static_cast<int>(y2.size()) != k)
        throw std::invalid_argument("align_frames: dimension mismatch");

    const double n1 = norm(x1), n2 = norm(x2), m1 = norm(y1), m2 = norm(y2);
    if (std::abs(n1 - m1) > tol.gram || std::abs(n2 - m2) > tol.gram ||
        std::abs(dot(x1, x2) - dot(y1, y2)) > tol.gram)
        throw gram_error("align_frames: frame Gram data disagree beyond tolerance");

    std::vector<std::vector<double>> u, v;
    if (n1 > tol.degenerate) {
        gs_append(u, x1, tol.degenerate);
        gs_append(v, y1, tol.degenerate);
    }
    if (n2 > tol.degenerate) {
        const std::size_t before = u.size();
        if (gs_append(u, x2, tol.degenerate)) {
            if (!gs_append(v, y2, tol.degenerate)) {
                // Matching Gram data makes the two residuals equal up to
                // tolerance; treat the pair as dependent on both sides.
                u.resize(before);
            }
        }
    }
    // Complete both frames with standard basis vectors in index order.
    for (int i = 0; i < k && static_cast<int>(u.size()) < k; ++i) {
        std::vector<double> ei(static_cast<std::size_t>(k), 0.0);
        ei[static_cast<std::size_t>(i)] = 1.0;
        gs_append(u, ei, tol.degenerate);
    }
    for (int i = 0; i < k && static_cast<int>(v.size()) < k; ++i) {
        std::vector<double> ei(static_cast<std::size_t>(k), 0.0);
        ei[static_cast<std::size_t>(i)] = 1.0;
        gs_append(v, ei, tol.degenerate);
    }
    if (static_cast<int>(u.size()) != k || static_cast<int>(v.size()) != k)
        throw std::runtime_error("align_frames: basis completion failed");

    return matmul(columns_to_matrix(v, k), transpose(columns_to_matrix(u, k)));
}

OrthogonalCertificate construct_q(const Graph& g, const Graph& h, const BitVec& b, const BitVec& c,
                                  const ToleranceConfig& tol) {
    const int n = g.order();
    if (h.order() != n) throw precondition_error("construct_q: graphs have different orders");
    if (static_cast<int>(b.size()) != n || static_cast<int>(c.size()) != n)
        throw std::invalid_argument("construct_q: attachment vector dimension mismatch");

    if (!is_generalized_cospectral(g, h))
        throw precondition_error("construct_q: graphs are not generalized cospectral");
    if (!is_generalized_cospectral(overgraph(g, b), overgraph(h, c)))
        throw precondition_error("construct_q: attached overgraphs are not generalized cospectral");

    const SpectralDecomp dg = eigendecompose(RealMatrix::adjacency(g));
    const SpectralDecomp dh = eigendecompose(RealMatrix::adjacency(h));
    if (dg.clusters.size() != dh.clusters.size())
        throw gram_error("construct_q: eigenvalue cluster structures disagree");

    const std::vector<double> bd = to_double(b), cd = to_double(c);
    const std::vector<double> e(static_cast<std::size_t>(n), 1.0);

    OrthogonalCertificate cert;
    cert.q = RealMatrix(n, n);
    for (std::size_t ci = 0; ci < dg.clusters.size(); ++ci) {
        const EigenCluster& pg = dg.clusters[ci];
        const EigenCluster& rh_ = dh.clusters[ci];
        if (pg.mult != rh_.mult)
            throw gram_error("construct_q: cluster multiplicities disagree");
        const int k = pg.mult;

        auto project = [n](const EigenCluster& cl, const std::vector<double>& vec) {
            std::vector<double> r(static_cast<std::size_t>(cl.mult), 0.0);
            for (int col = 0; col < cl.mult; ++col)
                for (int row = 0; row < n; ++row)
                    r[static_cast<std::size_t>(col)] += cl.basis(row, col) * vec[static_cast<std::size_t>(row)];
            return r;
        };
        const std::vector<double> xb = project(pg, bd), xe = project(pg, e);
        const std::vector<double> yb = project(rh_, cd), ye = project(rh_, e);

        const RealMatrix qi = align_frames(xb, xe, yb, ye, k, tol);

        // Q += P_i Q_i^T R_i^T
        const RealMatrix piqit = matmul(pg.basis, transpose(qi));
        const RealMatrix block = matmul(piqit, transpose(rh_.basis));
        for (std::size_t t = 0; t < cert.q.a.size(); ++t) cert.q.a[t] += block.a[t];
    }

    const RealMatrix ag = RealMatrix::adjacency(g), ah = RealMatrix::adjacency(h);
    fill_residuals(cert, ag, ah, &bd, &cd);
    cert.verified = verify_certificate(cert, ag, ah, &bd, &cd, tol.accept);
    return cert;
}

BlockCertificate construct_block_q(const RootedGraph& rg, const RootedGraph& rh, const ToleranceConfig& tol) {
    if (rg.graph.order() != rh.graph.order())
        throw precondition_error("construct_block_q: graphs have different orders");
    if (!is_rooted_generalized_cospectral(rg, rh).rooted_generalized)
        throw precondition_error("construct_block_q: rooted graphs are not generalized cospectral");

    const auto [g1, b] = split_root(rg);
    const auto [h1, c] = split_root(rh);

    BlockCertificate cert;
    cert.inner = construct_q(g1, h1, b, c, tol);

    const int n = rg.graph.order();
    cert.full = RealMatrix(n, n);
    for (int i = 0; i < n - 1; ++i)
        for (int j = 0; j < n - 1; ++j) cert.full(i, j) = cert.inner.q(i, j);
    cert.full(n - 1, n - 1) = 1.0;

    const RealMatrix ag = RealMatrix::adjacency(relabel_root_last(rg));
    const RealMatrix ah = RealMatrix::adjacency(relabel_root_last(rh));
    const RealMatrix ft = transpose(cert.full);
    cert.residual_orth = max_abs(matsub(matmul(ft, cert.full), RealMatrix::identity(n)));
    const RealMatrix conj = matmul(matmul(ft, ag), cert.full);
    cert.residual_conj = max_abs(matsub(conj, ah));
    const std::vector<double> e(static_cast<std::size_t>(n), 1.0);
    double re = 0.0;
    const std::vector<double> fe = matvec(ft, e);
    for (int i = 0; i < n; ++i) re = std::max(re, std::abs(fe[static_cast<std::size_t>(i)] - 1.0));
    cert.residual_e = re;
    cert.verified = cert.inner.verified && cert.residual_orth <= tol.accept &&
                    cert.residual_conj <= tol.accept && cert.residual_e <= tol.accept &&
                    rounds_to(conj, ah);
    return cert;
}

bool verify_certificate(const OrthogonalCertificate& cert, const RealMatrix& a_g, const RealMatrix& a_h,
                        const std::vector<double>* b, const std::vector<double>* c, double accept_tol) {
    const int n = cert.q.rows;
    if (cert.q.cols != n || a_g.rows != n || a_g.cols != n || a_h.rows != n || a_h.cols != n)
        throw std::invalid_argument("verify_certificate: dimension mismatch");
    if ((b == nullptr) != (c == nullptr) ||
        (b && (static_cast<int>(b->size()) != n || static_cast<int>(c->size()) != n)))
        throw std::invalid_argument("verify_certificate: attachment vector mismatch");

    OrthogonalCertificate fresh;
    fresh.q = cert.q;
    fill_residuals(fresh, a_g, a_h, b, c);
    if (fresh.residual_orth > accept_tol || fresh.residual_conj > accept_tol ||
        fresh.residual_e > accept_tol)
        return false;
    if (b && fresh.residual_b > accept_tol) return false;
    const RealMatrix conj = matmul(matmul(transpose(cert.q), a_g), cert.q);
    return rounds_to(conj, a_h);
}

bool verify_block_certificate(const BlockCertificate& cert, const RootedGraph& rg, const RootedGraph& rh,
                              double accept_tol) {
    const int n = rg.graph.order();
    if (rh.graph.order() != n || cert.full.rows != n || cert.full.cols != n) return false;
    for (int i = 0; i < n; ++i) {
        if (std::abs(cert.full(i, n - 1) - (i == n - 1 ? 1.0 : 0.0)) > accept_tol) return false;
        if (std::abs(cert.full(n - 1, i) - (i == n - 1 ? 1.0 : 0.0)) > accept_tol) return false;
    }
    const RealMatrix ag = RealMatrix::adjacency(relabel_root_last(rg));
    const RealMatrix ah = RealMatrix::adjacency(relabel_root_last(rh));
    OrthogonalCertificate as_plain;
    as_plain.q = cert.full;
    return verify_certificate(as_plain, ag, ah, nullptr, nullptr, accept_tol);
}

} // namespace cospec
