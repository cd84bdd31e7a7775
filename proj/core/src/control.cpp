#include "cospec/control.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cospec {

WalkMatrixData walk_matrix(const Graph& g) {
    const int n = g.order();
    if (n < 1) throw std::invalid_argument("walk_matrix: empty graph");
    WalkMatrixData data;
    data.w = RatMatrix(n, n);
    const RatMatrix a = RatMatrix::adjacency(g);
    std::vector<Rational> col(static_cast<std::size_t>(n), Rational(1));
    for (int j = 0; j < n; ++j) {
        if (j > 0) col = a * col;
        for (int i = 0; i < n; ++i) data.w(i, j) = col[static_cast<std::size_t>(i)];
    }
    data.rank = rank_exact(data.w);
    return data;
}

int main_eigenvalue_count(const Graph& g) { return walk_matrix(g).rank; }

std::string to_string(Controllability c) {
    switch (c) {
        case Controllability::controllable: return "controllable";
        case Controllability::almost_controllable: return "almost_controllable";
        case Controllability::neither: return "neither";
    }
    return "?";
}

Controllability classify_controllability(const Graph& g) {
    const int n = g.order();
    const int rank = main_eigenvalue_count(g);
    if (rank == n) return Controllability::controllable;
    if (rank == n - 1) return Controllability::almost_controllable;
    return Controllability::neither;
}

RatMatrix regular_householder(const std::vector<BigInt>& xi) {
    const int n = static_cast<int>(xi.size());
    BigInt ss = 0;
    for (const BigInt& v : xi) ss += v * v;
    if (ss == 0) throw std::invalid_argument("regular_householder: zero vector");
    RatMatrix q = RatMatrix::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            q(i, j) -= make_rational(2 * xi[static_cast<std::size_t>(i)] * xi[static_cast<std::size_t>(j)], ss);
    return q;
}

Q0Certificate compute_q0(const Graph& g) {
    const WalkMatrixData wd = walk_matrix(g);
    const int n = g.order();
    if (wd.rank != n - 1)
        throw precondition_error("compute_q0: graph is not almost controllable (walk rank " +
                                 std::to_string(wd.rank) + " of " + std::to_string(n) + ")");

    Q0Certificate cert;
    cert.xi = integer_kernel_vector(wd.w.transpose());
    cert.q0 = regular_householder(cert.xi);

    // Exact sanity: symmetric involution, row sums 1, commutation with A.
    const RatMatrix identity = RatMatrix::identity(n);
    if (!(cert.q0 * cert.q0 == identity)) throw std::logic_error("compute_q0: Q0^2 != I");
    if (!(cert.q0 == cert.q0.transpose())) throw std::logic_error("compute_q0: Q0 not symmetric");
    std::vector<Rational> e(static_cast<std::size_t>(n), Rational(1));
    const std::vector<Rational> q0e = cert.q0 * e;
    if (q0e != e) throw std::logic_error("compute_q0: Q0 e != e");
    const RatMatrix a = RatMatrix::adjacency(g);
    if (!(cert.q0.transpose() * a * cert.q0 == a)) throw std::logic_error("compute_q0: Q0^T A Q0 != A");

    cert.is_permutation = true;
    for (int i = 0; i < n && cert.is_permutation; ++i)
        for (int j = 0; j < n; ++j) {
            const Rational& v = cert.q0(i, j);
            if (!(v == 0 || v == 1)) {
                cert.is_permutation = false;
                break;
            }
        }
    return cert;
}

std::vector<std::vector<int>> permutation_solutions(const Graph& g) {
    const int n = g.order();
    if (n > 10) throw std::invalid_argument("permutation_solutions: brute force capped at n <= 10");
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> solutions;
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n; ++j)
                if (g.edge(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]) != g.edge(i, j)) {
                    ok = false;
                    break;
                }
        if (ok) solutions.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return solutions;
}

std::string to_string(ReconClause c) {
    switch (c) {
        case ReconClause::hs: return "Hs";
        case ReconClause::ha_q0b_excluded: return "Ha_with_Q0b_excluded";
        case ReconClause::controllable_card: return "controllable_card";
        case ReconClause::none: return "none";
    }
    return "?";
}

ReconstructibilityCertificate reconstructibility_certificate(const Graph& g) {
    const int n = g.order();
    if (n < 3) throw std::invalid_argument("reconstructibility_certificate: requires n >= 3");

    ReconstructibilityCertificate best;
    for (int u = 0; u < n; ++u) {
        auto [card, b] = split_root(RootedGraph{g, u});
        const Controllability cls = classify_controllability(card);
        if (cls == Controllability::controllable) {
            best.certified = true;
            best.witness_vertex = u;
            best.clause = ReconClause::controllable_card;
            best.b = std::move(b);
            return best;
        }
        if (cls != Controllability::almost_controllable) continue;

        const Q0Certificate q0 = compute_q0(card);
        if (q0.is_permutation) {
            best.certified = true;
            best.witness_vertex = u;
            best.clause = ReconClause::hs;
            best.xi = q0.xi;
            best.b = std::move(b);
            return best;
        }

        std::vector<Rational> bq(b.size());
        for (std::size_t i = 0; i < b.size(); ++i) bq[i] = b[i] ? 1 : 0;
        const std::vector<Rational> q0b = q0.q0 * bq;
        bool zero_one = true;
        bool equals_b = true;
        for (std::size_t i = 0; i < q0b.size(); ++i) {
            if (!(q0b[i] == 0 || q0b[i] == 1)) zero_one = false;
            if (q0b[i] != bq[i]) equals_b = false;
        }
        // Condition: Q0 b must not be a 0/1 vector different from b.
        if (!zero_one || equals_b) {
            best.certified = true;
            best.witness_vertex = u;
            best.clause = ReconClause::ha_q0b_excluded;
            best.xi = q0.xi;
            best.q0_b = q0b;
            best.b = std::move(b);
            return best;
        }
    }
    return best;
}

} // namespace cospec
