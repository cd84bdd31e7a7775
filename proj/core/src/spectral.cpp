#include "cospec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cospec {

RealMatrix RealMatrix::identity(int n) {
    RealMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

RealMatrix RealMatrix::adjacency(const Graph& g) {
    const int n = g.order();
    RealMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.edge(i, j)) m(i, j) = 1.0;
    return m;
}

RealMatrix matmul(const RealMatrix& a, const RealMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matmul dimension mismatch");
    RealMatrix r(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < b.cols; ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

RealMatrix transpose(const RealMatrix& m) {
    RealMatrix t(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) t(j, i) = m(i, j);
    return t;
}

RealMatrix matsub(const RealMatrix& a, const RealMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("matsub shape mismatch");
    RealMatrix r(a.rows, a.cols);
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = a.a[i] - b.a[i];
    return r;
}

double max_abs(const RealMatrix& m) {
    double v = 0.0;
    for (double x : m.a) v = std::max(v, std::abs(x));
    return v;
}

std::vector<double> matvec(const RealMatrix& m, const std::vector<double>& v) {
    if (m.cols != static_cast<int>(v.size())) throw std::invalid_argument("matvec dimension mismatch");
    std::vector<double> r(static_cast<std::size_t>(m.rows), 0.0);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r[static_cast<std::size_t>(i)] += m(i, j) * v[static_cast<std::size_t>(j)];
    return r;
}

SpectralDecomp eigendecompose(const RealMatrix& a0, double conv_tol) {
    if (a0.rows != a0.cols) throw std::invalid_argument("eigendecompose: non-square matrix");
    const int n = a0.rows;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(a0(i, j) - a0(j, i)) > 1e-12)
                throw std::invalid_argument("eigendecompose: matrix not symmetric");

    SpectralDecomp dec;
    dec.n = n;
    if (n == 0) return dec;

    RealMatrix a = a0;
    RealMatrix v = RealMatrix::identity(n);

    double frob = 0.0;
    for (double x : a.a) frob += x * x;
    frob = std::sqrt(frob);
    const double threshold = conv_tol * frob;

    const int max_sweeps = 100;
    bool converged = false;
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += 2.0 * a(i, j) * a(i, j);
        off = std::sqrt(off);
        if (off <= threshold) {
            converged = true;
            break;
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double app = a(p, p), aqq = a(q, q);
                const double tau = (aqq - app) / (2.0 * apq);
                const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }
    if (!converged) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += 2.0 * a(i, j) * a(i, j);
        if (std::sqrt(off) > threshold) throw std::runtime_error("eigendecompose: Jacobi failed to converge");
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) { return a(x, x) < a(y, y); });

    const double gap = 1e-7 * std::max(1.0, max_abs(a0));
    for (int k = 0; k < n;) {
        int end = k + 1;
        while (end < n &&
               a(order[static_cast<std::size_t>(end)], order[static_cast<std::size_t>(end)]) -
                       a(order[static_cast<std::size_t>(end - 1)], order[static_cast<std::size_t>(end - 1)]) <=
                   gap)
            ++end;
        EigenCluster cl;
        cl.mult = end - k;
        cl.basis = RealMatrix(n, cl.mult);
        double sum = 0.0;
        for (int c = 0; c < cl.mult; ++c) {
            const int col = order[static_cast<std::size_t>(k + c)];
            sum += a(col, col);
            for (int r = 0; r < n; ++r) cl.basis(r, c) = v(r, col);
        }
        cl.lambda = sum / cl.mult;
        dec.clusters.push_back(std::move(cl));
        k = end;
    }
    return dec;
}

SpectralProfile spectral_profile(const SpectralDecomp& d, const std::vector<double>& b) {
    if (static_cast<int>(b.size()) != d.n) throw std::invalid_argument("spectral_profile: dimension mismatch");
    const std::vector<double> e(static_cast<std::size_t>(d.n), 1.0);
    SpectralProfile p;
    for (const EigenCluster& cl : d.clusters) {
        double beta = 0.0, mu = 0.0, gamma = 0.0;
        for (int c = 0; c < cl.mult; ++c) {
            double pb = 0.0, pe = 0.0;
            for (int r = 0; r < d.n; ++r) {
                pb += cl.basis(r, c) * b[static_cast<std::size_t>(r)];
                pe += cl.basis(r, c) * e[static_cast<std::size_t>(r)];
            }
            beta += pb * pb;
            mu += pe * pe;
            gamma += pb * pe;
        }
        p.beta.push_back(beta);
        p.mu.push_back(mu);
        p.gamma.push_back(gamma);
    }
    return p;
}

SpectralProfile spectral_profile(const SpectralDecomp& d, const BitVec& b) {
    std::vector<double> bd(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) bd[i] = b[i] ? 1.0 : 0.0;
    return spectral_profile(d, bd);
}

namespace rpoly {

std::vector<double> add(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> r(std::max(a.size(), b.size()), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

std::vector<double> scale(const std::vector<double>& a, double s) {
    std::vector<double> r = a;
    for (double& x : r) x *= s;
    return r;
}

std::vector<double> mul(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<double> r(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

std::vector<double> shift_up(const std::vector<double>& a, int k) {
    std::vector<double> r(a.size() + static_cast<std::size_t>(k), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i + static_cast<std::size_t>(k)] = a[i];
    return r;
}

std::vector<double> synthetic_quotient(const std::vector<double>& a, double root) {
    if (a.size() < 2) return {};
    std::vector<double> q(a.size() - 1, 0.0);
    q[a.size() - 2] = a.back();
    for (std::size_t i = a.size() - 2; i > 0; --i) q[i - 1] = a[i] + root * q[i];
    return q;
}

std::vector<double> compose_neg_shift(const std::vector<double>& a) {
    // Horner in polynomial arithmetic with inner polynomial (-1 - x).
    std::vector<double> r;
    const std::vector<double> inner = {-1.0, -1.0};
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
        r = mul(r, inner);
        if (r.empty()) r.assign(1, 0.0);
        r[0] += *it;
    }
    return r;
}

double eval(const std::vector<double>& a, double x) {
    double acc = 0.0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + *it;
    return acc;
}

} // namespace rpoly

std::vector<double> to_real(const IntPoly& p) {
    std::vector<double> r(p.coeffs.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = p.coeffs[i].get_d();
    return r;
}

std::vector<double> charpoly_overgraph_spectral(const SpectralDecomp& d, const BitVec& b, const IntPoly& chi) {
    if (static_cast<int>(b.size()) != d.n) throw std::invalid_argument("dimension mismatch");
    for (auto v : b)
        if (v > 1) throw std::invalid_argument("attachment vector must be 0/1");
    const SpectralProfile p = spectral_profile(d, b);
    const std::vector<double> chi_r = to_real(chi);
    std::vector<double> result = rpoly::shift_up(chi_r, 1);
    for (std::size_t i = 0; i < d.clusters.size(); ++i) {
        if (p.beta[i] == 0.0) continue;
        const auto q = rpoly::synthetic_quotient(chi_r, d.clusters[i].lambda);
        result = rpoly::add(result, rpoly::scale(q, -p.beta[i]));
    }
    return result;
}

std::vector<double> charpoly_complement_spectral(const SpectralDecomp& d, const IntPoly& chi) {
    const std::vector<double> chi_r = to_real(chi);
    std::vector<double> acc = rpoly::compose_neg_shift(chi_r);
    for (const EigenCluster& cl : d.clusters) {
        double mu = 0.0;
        for (int c = 0; c < cl.mult; ++c) {
            double pe = 0.0;
            for (int r = 0; r < d.n; ++r) pe += cl.basis(r, c);
            mu += pe * pe;
        }
        if (mu == 0.0) continue;
        // chi(-x-1)/(x+1+lambda) == -q(-x-1) with q = chi/(x - lambda).
        const auto q = rpoly::synthetic_quotient(chi_r, cl.lambda);
        acc = rpoly::add(acc, rpoly::scale(rpoly::compose_neg_shift(q), mu));
    }
    const double sign = (d.n % 2 == 0) ? 1.0 : -1.0;
    return rpoly::scale(acc, sign);
}

std::vector<double> charpoly_double_overgraph_spectral(const SpectralDecomp& d, const SpectralProfile& profile,
                                                       const IntPoly& chi) {
    const std::size_t m = d.clusters.size();
    if (profile.beta.size() != m || profile.mu.size() != m || profile.gamma.size() != m)
        throw std::invalid_argument("profile/decomposition cluster count mismatch");

    const std::vector<double> chi_r = to_real(chi);

    // chi * ((x - B)(x - M) - (1 + C)^2) with B, M, C the cluster sums of
    // beta/mu/gamma over (x - lambda_i), cleared via synthetic quotients.
    std::vector<double> result = rpoly::shift_up(chi_r, 2);
    result = rpoly::add(result, rpoly::scale(chi_r, -1.0));

    std::vector<std::vector<double>> q(m);
    for (std::size_t i = 0; i < m; ++i) q[i] = rpoly::synthetic_quotient(chi_r, d.clusters[i].lambda);

    for (std::size_t i = 0; i < m; ++i) {
        const double lin = profile.beta[i] + profile.mu[i];
        if (lin != 0.0) result = rpoly::add(result, rpoly::shift_up(rpoly::scale(q[i], -lin), 1));
        if (profile.gamma[i] != 0.0) result = rpoly::add(result, rpoly::scale(q[i], -2.0 * profile.gamma[i]));
    }

    // Diagonal terms: (beta_i mu_i - gamma_i^2) chi/(x - lambda_i)^2. For a
    // one-dimensional cluster the coefficient vanishes identically
    // (Cauchy-Schwarz equality on scalars), so only mult >= 2 contributes.
    for (std::size_t i = 0; i < m; ++i) {
        if (d.clusters[i].mult < 2) continue;
        const double di = profile.beta[i] * profile.mu[i] - profile.gamma[i] * profile.gamma[i];
        if (di == 0.0) continue;
        const auto r2 = rpoly::synthetic_quotient(q[i], d.clusters[i].lambda);
        result = rpoly::add(result, rpoly::scale(r2, di));
    }

    // Cross terms via partial fractions: chi/((x-li)(x-lj)) = (qi - qj)/(li - lj).
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const double cij = profile.beta[i] * profile.mu[j] + profile.beta[j] * profile.mu[i] -
                               2.0 * profile.gamma[i] * profile.gamma[j];
            if (cij == 0.0) continue;
            const auto diff = rpoly::add(q[i], rpoly::scale(q[j], -1.0));
            result = rpoly::add(result, rpoly::scale(diff, cij / (d.clusters[i].lambda - d.clusters[j].lambda)));
        }
    }
    return result;
}

} // namespace cospec
