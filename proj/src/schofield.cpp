#include "qbf/schofield.hpp"

#include <algorithm>
#include <numeric>

namespace qbf {

uint64_t derive_seed(uint64_t seed, uint64_t salt) {
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

void Representation::check_shapes(const Quiver& q) const {
    if ((int)dims.size() != q.n() || mats.size() != q.arrows.size())
        throw invariant_violation("representation shape mismatch");
    for (size_t i = 0; i < mats.size(); ++i) {
        const auto& a = q.arrows[i];
        if (mats[i].rows != (int)dims[a.head] || mats[i].cols != (int)dims[a.tail])
            throw invariant_violation("matrix shape mismatch on arrow " + a.id);
    }
}

Representation random_representation(const Quiver& q, const DimVector& dims, uint64_t seed) {
    std::mt19937_64 rng(seed);
    Representation r;
    r.dims = dims;
    for (const auto& a : q.arrows) {
        IntMat m((int)dims[a.head], (int)dims[a.tail]);
        for (auto& v : m.a) v = (int64_t)(rng() % 199) - 99;
        r.mats.push_back(std::move(m));
    }
    return r;
}

namespace {

// Block matrix of d^V_W for concrete V, W: rows = arrows (a_ta*b_ha each),
// cols = vertices (a_x*b_x each). Entry layout follows the Kronecker
// identities vec(W(a) phi_ta) = (I (x) W(a)) vec(phi_ta) and
// vec(phi_ha V(a)) = (V(a)^t (x) I) vec(phi_ha).
IntMat dvw_matrix(const Quiver& q, const Representation& V, const Representation& W) {
    const auto& alpha = V.dims;
    const auto& beta = W.dims;
    std::vector<int> colstart(q.n() + 1, 0);
    for (int x = 0; x < q.n(); ++x)
        colstart[x + 1] = colstart[x] + (int)(alpha[x] * beta[x]);
    int rows = 0;
    for (const auto& a : q.arrows) rows += (int)(alpha[a.tail] * beta[a.head]);
    IntMat m(rows, colstart[q.n()]);
    int r0 = 0;
    for (size_t ai = 0; ai < q.arrows.size(); ++ai) {
        const auto& a = q.arrows[ai];
        int at = (int)alpha[a.tail], ah = (int)alpha[a.head];
        int bt = (int)beta[a.tail], bh = (int)beta[a.head];
        // row (p, i) for p < at, i < bh; col ta: (p, j) for j < bt; entry W(a)(i,j)
        for (int p = 0; p < at; ++p)
            for (int i = 0; i < bh; ++i)
                for (int j = 0; j < bt; ++j)
                    m(r0 + p * bh + i, colstart[a.tail] + p * bt + j) = W.mats[ai](i, j);
        // col ha: (r, i) for r < ah; entry V(a)(r, p)
        for (int p = 0; p < at; ++p)
            for (int i = 0; i < bh; ++i)
                for (int r = 0; r < ah; ++r)
                    m(r0 + p * bh + i, colstart[a.head] + r * bh + i) = V.mats[ai](r, p);
        r0 += at * bh;
    }
    return m;
}

} // namespace

int hom_dim(const Quiver& q, const Representation& V, const Representation& W, bool fast) {
    IntMat m = dvw_matrix(q, V, W);
    int total = 0;
    for (int x = 0; x < q.n(); ++x) total += (int)(V.dims[x] * W.dims[x]);
    int r = fast ? rank_fast(m) : rank_exact(m);
    return total - r;
}

HomExt generic_hom_ext(const Quiver& q, const DimVector& alpha, const DimVector& beta,
                       uint64_t seed) {
    for (auto v : alpha)
        if (v < 0) throw input_error("generic_hom_ext: alpha must be nonnegative");
    for (auto v : beta)
        if (v < 0) throw input_error("generic_hom_ext: beta must be nonnegative");
    Int pairing = euler_form(q, alpha, beta);
    for (int attempt = 0; attempt < 3; ++attempt) {
        Representation v1 = random_representation(q, alpha, derive_seed(seed, 2 * attempt));
        Representation w1 = random_representation(q, beta, derive_seed(seed, 2 * attempt + 100));
        Representation v2 = random_representation(q, alpha, derive_seed(seed, 2 * attempt + 1));
        Representation w2 = random_representation(q, beta, derive_seed(seed, 2 * attempt + 101));
        int h1 = hom_dim(q, v1, w1);
        int h2 = hom_dim(q, v2, w2);
        if (h1 == h2) {
            HomExt he;
            he.hom = h1;
            he.ext = (int)(Int(h1) - pairing);
            return he;
        }
    }
    throw not_applicable("generic_hom_ext: seeds disagree after retries (non-generic samples)");
}

Representation random_exceptional(const Quiver& q, const DimVector& alpha, uint64_t seed) {
    Int self = euler_form(q, alpha, alpha);
    if (self != 1)
        throw input_error("random_exceptional: <alpha,alpha> = " + self.str() +
                          " != 1 (not a real Schur root)");
    for (auto v : alpha)
        if (v < 0) throw input_error("random_exceptional: alpha must be nonnegative");
    for (int attempt = 0; attempt < 3; ++attempt) {
        Representation V = random_representation(q, alpha, derive_seed(seed, attempt));
        // Ext(V,V) = 0 iff hom(V,V) = <alpha,alpha> = 1
        if (hom_dim(q, V, V) == 1) return V;
    }
    throw not_applicable("random_exceptional: certification failed after retries");
}

SchofieldSystem build_schofield(const Quiver& q, const DimVector& beta, const Representation& V) {
    const auto& alpha = V.dims;
    if (euler_form(q, alpha, beta) != 0)
        throw input_error("build_schofield requires <alpha,beta> = 0");
    SchofieldSystem sys;
    // variables: entries of W(a) for every arrow, row-major
    std::vector<int> varstart(q.arrows.size() + 1, 0);
    for (size_t ai = 0; ai < q.arrows.size(); ++ai) {
        const auto& a = q.arrows[ai];
        varstart[ai + 1] = varstart[ai] + (int)(beta[a.head] * beta[a.tail]);
    }
    sys.nvars = varstart[q.arrows.size()];
    for (size_t ai = 0; ai < q.arrows.size(); ++ai) {
        const auto& a = q.arrows[ai];
        for (int i = 0; i < beta[a.head]; ++i)
            for (int j = 0; j < beta[a.tail]; ++j)
                sys.varnames.push_back("x" + a.id + "_" + std::to_string(i + 1) + "_" +
                                       std::to_string(j + 1));
    }
    std::vector<int> colstart(q.n() + 1, 0);
    for (int x = 0; x < q.n(); ++x)
        colstart[x + 1] = colstart[x] + (int)(alpha[x] * beta[x]);
    int total = colstart[q.n()];
    int rows = 0;
    for (const auto& a : q.arrows) rows += (int)(alpha[a.tail] * beta[a.head]);
    if (rows != total) throw invariant_violation("Schofield grid is not square");
    sys.block.assign(total, std::vector<SparsePoly>(total, SparsePoly(sys.nvars)));
    int r0 = 0;
    for (size_t ai = 0; ai < q.arrows.size(); ++ai) {
        const auto& a = q.arrows[ai];
        int at = (int)alpha[a.tail], ah = (int)alpha[a.head];
        int bt = (int)beta[a.tail], bh = (int)beta[a.head];
        for (int p = 0; p < at; ++p)
            for (int i = 0; i < bh; ++i) {
                int row = r0 + p * bh + i;
                for (int j = 0; j < bt; ++j)
                    sys.block[row][colstart[a.tail] + p * bt + j] =
                        SparsePoly::variable(sys.nvars, varstart[ai] + i * bt + j);
                for (int r = 0; r < ah; ++r)
                    if (V.mats[ai](r, p) != 0)
                        sys.block[row][colstart[a.head] + r * bh + i] =
                            SparsePoly::constant(sys.nvars, Rat(V.mats[ai](r, p)));
            }
        r0 += at * bh;
    }
    // symbolic determinant by cofactor expansion, always along the row with
    // the fewest nonzero entries among the remaining ones (the grids are
    // block-sparse, so this collapses quickly)
    struct Det {
        const std::vector<std::vector<SparsePoly>>& m;
        int n;
        SparsePoly run(std::vector<int> rows, std::vector<int> cols) {
            if (rows.empty()) return SparsePoly::constant(nvars, Rat(1));
            // pick sparsest row
            size_t best = 0, bestcount = SIZE_MAX;
            for (size_t ri = 0; ri < rows.size(); ++ri) {
                size_t cnt = 0;
                for (int c : cols) cnt += !m[rows[ri]][c].is_zero();
                if (cnt < bestcount) {
                    bestcount = cnt;
                    best = ri;
                }
            }
            if (bestcount == 0) return SparsePoly(nvars);
            int row = rows[best];
            rows.erase(rows.begin() + best);
            SparsePoly acc(nvars);
            for (size_t ci = 0; ci < cols.size(); ++ci) {
                const SparsePoly& e = m[row][cols[ci]];
                int s = ((best + ci) % 2 == 0) ? 1 : -1;
                if (e.is_zero()) continue;
                std::vector<int> subcols = cols;
                subcols.erase(subcols.begin() + ci);
                SparsePoly sub = run(rows, subcols);
                if (sub.is_zero()) continue;
                SparsePoly term = e * sub;
                if (s < 0) term = term * Rat(-1);
                acc += term;
            }
            return acc;
        }
        int nvars;
    };
    std::vector<int> rows_(total), cols_(total);
    std::iota(rows_.begin(), rows_.end(), 0);
    std::iota(cols_.begin(), cols_.end(), 0);
    Det det{sys.block, total, sys.nvars};
    sys.f = det.run(rows_, cols_);
    return sys;
}

std::vector<Rat> flatten_point(const Quiver& q, const DimVector& beta,
                               const std::vector<std::vector<std::vector<Rat>>>& per_arrow) {
    std::vector<Rat> out;
    for (size_t ai = 0; ai < q.arrows.size(); ++ai) {
        const auto& a = q.arrows[ai];
        if ((int)per_arrow[ai].size() != beta[a.head])
            throw input_error("flatten_point: matrix shape mismatch on arrow " + a.id);
        for (int i = 0; i < beta[a.head]; ++i) {
            if ((int)per_arrow[ai][i].size() != beta[a.tail])
                throw input_error("flatten_point: matrix shape mismatch on arrow " + a.id);
            for (int j = 0; j < beta[a.tail]; ++j) out.push_back(per_arrow[ai][i][j]);
        }
    }
    return out;
}

} // namespace qbf
