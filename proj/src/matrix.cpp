#include "qbf/matrix.hpp"

namespace qbf {

IntMat IntMat::mul(const IntMat& o) const {
    IntMat r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const Int& v = (*this)(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols; ++j) r(i, j) += v * o(k, j);
        }
    return r;
}

IntMat IntMat::transpose() const {
    IntMat r(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r(j, i) = (*this)(i, j);
    return r;
}

IntMat IntMat::identity(int n) {
    IntMat r(n, n);
    for (int i = 0; i < n; ++i) r(i, i) = 1;
    return r;
}

IntMat IntMat::pow(int e) const {
    IntMat r = identity(rows);
    IntMat base = *this;
    while (e > 0) {
        if (e & 1) r = r.mul(base);
        e >>= 1;
        if (e) base = base.mul(base);
    }
    return r;
}

std::vector<Int> IntMat::mul_vec(const std::vector<Int>& v) const {
    std::vector<Int> r(rows, Int(0));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if ((*this)(i, j) != 0) r[i] += (*this)(i, j) * v[j];
    return r;
}

int rank_exact(IntMat m) {
    int rank = 0;
    Int prev = 1;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int piv = -1;
        for (int r = rank; r < m.rows; ++r)
            if (m(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(rank, j));
        for (int r = rank + 1; r < m.rows; ++r) {
            for (int j = col + 1; j < m.cols; ++j)
                m(r, j) = (m(rank, col) * m(r, j) - m(r, col) * m(rank, j)) / prev;
            m(r, col) = 0;
        }
        prev = m(rank, col);
        ++rank;
    }
    return rank;
}

namespace {

int rank_mod(const IntMat& m, int64_t p) {
    std::vector<std::vector<int64_t>> a(m.rows, std::vector<int64_t>(m.cols));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) {
            Int v = m(i, j) % p;
            if (v < 0) v += p;
            a[i][j] = (int64_t)v;
        }
    auto inv_mod = [&](int64_t x) {
        // p prime
        int64_t r = 1, e = p - 2, b = x % p;
        while (e) {
            if (e & 1) r = (__int128)r * b % p;
            b = (__int128)b * b % p;
            e >>= 1;
        }
        return r;
    };
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int piv = -1;
        for (int r = rank; r < m.rows; ++r)
            if (a[r][col]) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[piv], a[rank]);
        int64_t ip = inv_mod(a[rank][col]);
        for (int r = rank + 1; r < m.rows; ++r) {
            if (!a[r][col]) continue;
            int64_t f = (__int128)a[r][col] * ip % p;
            for (int j = col; j < m.cols; ++j) {
                a[r][j] = (a[r][j] - (__int128)f * a[rank][j]) % p;
                if (a[r][j] < 0) a[r][j] += p;
            }
        }
        ++rank;
    }
    return rank;
}

} // namespace

int rank_fast(const IntMat& m) {
    if ((int64_t)m.rows * m.cols <= 64) return rank_exact(m);
    int r1 = rank_mod(m, 2147483629LL);
    int r2 = rank_mod(m, 2147483587LL);
    if (r1 == r2) return r1;
    return rank_exact(m);
}

Int det_exact(IntMat m) {
    if (m.rows != m.cols) throw invariant_violation("det of non-square matrix");
    int n = m.rows;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m(k, k) == 0) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (m(r, k) != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(k, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return n ? Int(sign) * m(n - 1, n - 1) : Int(1);
}

IntMat inverse_unimodular(const IntMat& m) {
    Int d = det_exact(m);
    if (d != 1 && d != -1) throw invariant_violation("matrix is not unimodular");
    int n = m.rows;
    // adjugate via rational-free Gauss on an augmented integer system is
    // overkill at this size; use cofactors.
    IntMat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            IntMat minor(n - 1, n - 1);
            for (int r = 0, rr = 0; r < n; ++r) {
                if (r == j) continue;
                for (int c = 0, cc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor(rr, cc) = m(r, c);
                    ++cc;
                }
                ++rr;
            }
            Int cof = det_exact(minor);
            if ((i + j) & 1) cof = -cof;
            inv(i, j) = cof * d; // d = 1/d for unimodular
        }
    return inv;
}

} // namespace qbf
