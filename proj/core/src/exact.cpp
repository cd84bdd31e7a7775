#include "cospec/exact.hpp"

#include <stdexcept>
#include <string>

namespace cospec {

Rational make_rational(long num, long den) { return make_rational(BigInt(num), BigInt(den)); }

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

RatMatrix::RatMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::adjacency(const Graph& g) {
    const int n = g.order();
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.edge(i, j)) m(i, j) = 1;
    return m;
}

RatMatrix RatMatrix::column(const std::vector<Rational>& v) {
    RatMatrix m(static_cast<int>(v.size()), 1);
    for (int i = 0; i < m.rows(); ++i) m(i, 0) = v[static_cast<std::size_t>(i)];
    return m;
}

RatMatrix RatMatrix::permutation(const std::vector<int>& p) {
    const int n = static_cast<int>(p.size());
    RatMatrix m(n, n);
    for (int j = 0; j < n; ++j) m(p[static_cast<std::size_t>(j)], j) = 1;
    return m;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Rational RatMatrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
    Rational s = 0;
    for (int i = 0; i < rows_; ++i) s += (*this)(i, i);
    return s;
}

namespace {

void check_same_shape(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix shape mismatch");
}

} // namespace

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
    check_same_shape(a, b);
    RatMatrix r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
    check_same_shape(a, b);
    RatMatrix r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
    return r;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
    RatMatrix r(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

RatMatrix operator*(const Rational& s, const RatMatrix& a) {
    RatMatrix r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(i, j) = s * a(i, j);
    return r;
}

std::vector<Rational> operator*(const RatMatrix& a, const std::vector<Rational>& v) {
    if (a.cols() != static_cast<int>(v.size()))
        throw std::invalid_argument("matrix-vector dimension mismatch");
    std::vector<Rational> r(static_cast<std::size_t>(a.rows()));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r[static_cast<std::size_t>(i)] += a(i, j) * v[static_cast<std::size_t>(j)];
    return r;
}

BigInt IntPoly::eval(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

void IntPoly::trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

IntPoly poly_add(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()));
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
        if (i < a.coeffs.size()) r.coeffs[i] += a.coeffs[i];
        if (i < b.coeffs.size()) r.coeffs[i] += b.coeffs[i];
    }
    r.trim();
    return r;
}

IntPoly poly_sub(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()));
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
        if (i < a.coeffs.size()) r.coeffs[i] += a.coeffs[i];
        if (i < b.coeffs.size()) r.coeffs[i] -= b.coeffs[i];
    }
    r.trim();
    return r;
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.coeffs.empty() || b.coeffs.empty()) return {};
    IntPoly r;
    r.coeffs.resize(a.coeffs.size() + b.coeffs.size() - 1);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    r.trim();
    return r;
}

std::vector<Rational> charpoly_rational(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("charpoly of non-square matrix");
    const int n = m.rows();
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    c[static_cast<std::size_t>(n)] = 1;
    if (n == 0) return c;

    RatMatrix mk = m; // M_1 = A
    c[static_cast<std::size_t>(n - 1)] = -mk.trace();
    for (int k = 2; k <= n; ++k) {
        RatMatrix shifted = mk;
        const Rational& ck = c[static_cast<std::size_t>(n - k + 1)];
        for (int i = 0; i < n; ++i) shifted(i, i) += ck;
        mk = m * shifted;
        c[static_cast<std::size_t>(n - k)] = -mk.trace() / k;
    }
    return c;
}

IntPoly charpoly_exact(const RatMatrix& m) {
    const std::vector<Rational> c = charpoly_rational(m);
    IntPoly p;
    p.coeffs.reserve(c.size());
    for (const Rational& q : c) {
        if (q.get_den() != 1)
            throw std::domain_error("characteristic polynomial has non-integer coefficient " + q.get_str());
        p.coeffs.push_back(q.get_num());
    }
    p.trim();
    return p;
}

IntPoly charpoly_exact(const Graph& g) { return charpoly_exact(RatMatrix::adjacency(g)); }

int rank_exact(const RatMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    // Clear denominators row by row; rank is unchanged.
    std::vector<std::vector<BigInt>> a(static_cast<std::size_t>(rows),
                                       std::vector<BigInt>(static_cast<std::size_t>(cols)));
    for (int i = 0; i < rows; ++i) {
        BigInt lcm = 1;
        for (int j = 0; j < cols; ++j) {
            const BigInt& den = m(i, j).get_den();
            lcm = lcm / gcd(lcm, den) * den;
        }
        for (int j = 0; j < cols; ++j) {
            const Rational& q = m(i, j);
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                q.get_num() * (lcm / q.get_den());
        }
    }

    // Bareiss fraction-free elimination with row pivoting and column skipping.
    BigInt prev = 1;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i)
            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(rank)]);
        const std::vector<BigInt>& prow = a[static_cast<std::size_t>(rank)];
        for (int i = rank + 1; i < rows; ++i) {
            std::vector<BigInt>& row = a[static_cast<std::size_t>(i)];
            const BigInt head = row[static_cast<std::size_t>(col)];
            for (int j = col; j < cols; ++j) {
                row[static_cast<std::size_t>(j)] =
                    (row[static_cast<std::size_t>(j)] * prow[static_cast<std::size_t>(col)] -
                     head * prow[static_cast<std::size_t>(j)]) /
                    prev;
            }
        }
        prev = prow[static_cast<std::size_t>(col)];
        ++rank;
    }
    return rank;
}

std::vector<BigInt> integer_kernel_vector(const RatMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    // Reduced row echelon form over the rationals.
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(rows),
                                         std::vector<Rational>(static_cast<std::size_t>(cols)));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j);

    std::vector<int> pivot_col;
    int r = 0;
    for (int col = 0; col < cols && r < rows; ++col) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(r)]);
        const Rational inv = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
        for (int j = col; j < cols; ++j) a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] /= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            const Rational f = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
            if (f == 0) continue;
            for (int j = col; j < cols; ++j)
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                    f * a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
        }
        pivot_col.push_back(col);
        ++r;
    }

    const int nullity = cols - r;
    if (nullity != 1)
        throw std::domain_error("kernel dimension is " + std::to_string(nullity) + ", expected 1");

    int free_col = -1;
    for (int col = 0, k = 0; col < cols; ++col) {
        if (k < r && pivot_col[static_cast<std::size_t>(k)] == col) {
            ++k;
            continue;
        }
        free_col = col;
        break;
    }

    std::vector<Rational> x(static_cast<std::size_t>(cols));
    x[static_cast<std::size_t>(free_col)] = 1;
    for (int i = 0; i < r; ++i)
        x[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(i)])] =
            -a[static_cast<std::size_t>(i)][static_cast<std::size_t>(free_col)];

    BigInt lcm = 1;
    for (const Rational& q : x) {
        const BigInt& den = q.get_den();
        lcm = lcm / gcd(lcm, den) * den;
    }
    std::vector<BigInt> xi(static_cast<std::size_t>(cols));
    BigInt g = 0;
    for (int j = 0; j < cols; ++j) {
        xi[static_cast<std::size_t>(j)] = x[static_cast<std::size_t>(j)].get_num() *
                                          (lcm / x[static_cast<std::size_t>(j)].get_den());
        g = gcd(g, xi[static_cast<std::size_t>(j)]);
    }
    for (auto& v : xi) v /= g;
    for (const auto& v : xi) {
        if (v == 0) continue;
        if (v < 0)
            for (auto& w : xi) w = -w;
        break;
    }
    return xi;
}

} // namespace cospec
