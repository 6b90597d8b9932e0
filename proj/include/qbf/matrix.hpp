#pragma once

#include "qbf/rational.hpp"

#include <cstdint>
#include <vector>

namespace qbf {

/// Dense integer matrix, row-major. Used for Euler/Coxeter matrices and for
/// the numeric Hom-rank computations.
struct IntMat {
    int rows = 0, cols = 0;
    std::vector<Int> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a((size_t)r * c, Int(0)) {}
    Int& operator()(int i, int j) { return a[(size_t)i * cols + j]; }
    const Int& operator()(int i, int j) const { return a[(size_t)i * cols + j]; }

    bool operator==(const IntMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

    IntMat mul(const IntMat& o) const;
    IntMat transpose() const;
    static IntMat identity(int n);
    IntMat pow(int e) const;
    std::vector<Int> mul_vec(const std::vector<Int>& v) const;
};

/// Exact rank via fraction-free (Bareiss) elimination.
int rank_exact(IntMat m);

/// Rank over F_p for two fixed 31-bit primes; escalates to rank_exact when
/// the two disagree. Much faster on the large matrices of the decomposition
/// oracle; a slip would be caught downstream by the seed/cross checks.
int rank_fast(const IntMat& m);

/// Determinant via Bareiss.
Int det_exact(IntMat m);

/// Inverse of a unimodular integer matrix (det = +-1); throws otherwise.
IntMat inverse_unimodular(const IntMat& m);

} // namespace qbf
