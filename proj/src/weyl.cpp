#include "qbf/weyl.hpp"

#include <functional>
#include <sstream>

namespace qbf {

namespace {

// Exact dense linear solve over the rationals (Gauss-Jordan).
std::vector<Rat> solve_rational(std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
    int n = (int)a.size();
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw invariant_violation("interpolation system is singular");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        Rat inv = Rat(1) / a[col][col];
        for (int j = col; j < n; ++j) a[col][j] *= inv;
        b[col] *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rat f = a[r][col];
            for (int j = col; j < n; ++j) a[r][j] -= f * a[col][j];
            b[r] -= f * b[col];
        }
    }
    return b;
}

void simplex_points(int l, int64_t total, std::vector<std::vector<int64_t>>& out) {
    std::vector<int64_t> cur(l, 0);
    std::function<void(int, int64_t)> rec = [&](int pos, int64_t left) {
        if (pos == l) {
            out.push_back(cur);
            return;
        }
        for (int64_t v = 0; v <= left; ++v) {
            cur[pos] = v;
            rec(pos + 1, left - v);
        }
    };
    rec(0, total);
}

} // namespace

SparsePoly bfunction_oracle(const std::vector<SparsePoly>& fs, const std::vector<int64_t>& m,
                            int64_t budget) {
    int l = (int)fs.size();
    if ((int)m.size() != l) throw input_error("oracle: m arity mismatch");
    if (l == 0) throw input_error("oracle: no polynomials given");
    int nv = fs[0].nvars();
    std::vector<int64_t> degs(l);
    int64_t D = 0, cost = 0;
    for (int i = 0; i < l; ++i) {
        if (fs[i].is_zero()) throw input_error("oracle: zero polynomial");
        if (fs[i].nvars() != nv) throw input_error("oracle: variable set mismatch");
        degs[i] = fs[i].total_degree();
        D += m[i] * degs[i];
        cost += m[i] * degs[i] * degs[i];
    }
    if (cost > budget)
        throw not_applicable("oracle degree budget exceeded (cost " + std::to_string(cost) +
                             " > budget " + std::to_string(budget) + ")");
    if (D == 0) return SparsePoly::constant(l, Rat(1));

    // dual operator: coefficients are rational, duals equal the polynomials
    // themselves read in the partial-derivative variables
    SparsePoly op = SparsePoly::constant(nv, Rat(1));
    for (int i = 0; i < l; ++i) op = op * fs[i].pow((int)m[i]);

    // cached powers f_i^k for k <= D + m_i; dense inputs can blow up far
    // beyond what the degree budget predicts, so cap the working size too
    constexpr size_t kTermCap = 200000;
    std::vector<std::vector<SparsePoly>> pw(l);
    for (int i = 0; i < l; ++i) {
        pw[i].push_back(SparsePoly::constant(nv, Rat(1)));
        for (int64_t k = 1; k <= D + m[i]; ++k) {
            pw[i].push_back(pw[i].back() * fs[i]);
            if (pw[i].back().term_count() > kTermCap)
                throw not_applicable("oracle term budget exceeded (f^" + std::to_string(k) +
                                     " has " + std::to_string(pw[i].back().term_count()) +
                                     " terms)");
        }
    }

    std::vector<std::vector<int64_t>> grid;
    simplex_points(l, D, grid);

    std::vector<Rat> values;
    values.reserve(grid.size());
    for (const auto& N : grid) {
        SparsePoly numer = pw[0][N[0] + m[0]];
        for (int i = 1; i < l; ++i) numer = numer * pw[i][N[i] + m[i]];
        SparsePoly g = numer.apply_operator(op);
        SparsePoly denom = pw[0][N[0]];
        for (int i = 1; i < l; ++i) denom = denom * pw[i][N[i]];
        SparsePoly qpoly = g.divide_exact(denom);
        if (!qpoly.is_constant())
            throw invariant_violation(
                "oracle: quotient is not constant (non-multiplicity-free weight or bad dual)");
        values.push_back(qpoly.constant_value());
    }

    // interpolate on the simplex grid: unknown coefficients over the
    // total-degree-<= D monomials in s_1..s_l
    std::vector<std::vector<int64_t>> monoms;
    simplex_points(l, D, monoms);
    size_t n = monoms.size();
    std::vector<std::vector<Rat>> A(n, std::vector<Rat>(n));
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) {
            Rat v = 1;
            for (int i = 0; i < l; ++i)
                for (int64_t k = 0; k < monoms[c][i]; ++k) v *= Rat(grid[r][i]);
            A[r][c] = v;
        }
    std::vector<Rat> coeffs = solve_rational(A, values);
    SparsePoly b(l);
    for (size_t c = 0; c < n; ++c) {
        Monomial mm(monoms[c].begin(), monoms[c].end());
        b.add_term(mm, coeffs[c]);
    }
    return b;
}

std::vector<SparsePoly> afunction(const std::vector<SparsePoly>& fs, const std::vector<Rat>& a0) {
    int l = (int)fs.size();
    if (l == 0) throw input_error("afunction: no polynomials given");
    int nv = fs[0].nvars();
    if ((int)a0.size() != nv) throw input_error("afunction: point arity mismatch");
    std::vector<Rat> fvals(l);
    for (int i = 0; i < l; ++i) {
        fvals[i] = fs[i].eval(a0);
        if (fvals[i] == 0) throw input_error("afunction: f_" + std::to_string(i + 1) + "(A0) = 0");
    }
    // substitution: variable v |-> sum_i s_i * (grad log f_i)(A0)_v
    std::vector<SparsePoly> subs(nv, SparsePoly(l));
    for (int i = 0; i < l; ++i) {
        for (int v = 0; v < nv; ++v) {
            Rat g = fs[i].derivative(v).eval(a0) / fvals[i];
            if (g == 0) continue;
            Monomial mm(l, 0);
            mm[i] = 1;
            subs[v].add_term(mm, g);
        }
    }
    std::vector<SparsePoly> out;
    for (int k = 0; k < l; ++k) out.push_back(fs[k].eval_poly(subs, l) * fvals[k]);
    return out;
}

VerifyReport verify_against_oracle(const FactorProduct& closed, const std::vector<SparsePoly>& fs,
                                   const std::vector<int64_t>& m, int64_t budget) {
    VerifyReport rep;
    if (!closed.is_polynomial())
        throw input_error("verify: closed form has negative multiplicities");
    rep.oracle_b = bfunction_oracle(fs, m, budget);
    SparsePoly lhs = closed.expand();
    Rat lam;
    if (equal_up_to_scalar(lhs, rep.oracle_b, &lam)) {
        rep.match = true;
        rep.scalar = lam;
        rep.detail = "match (scalar " + rat_to_string(lam) + ")";
        return rep;
    }
    rep.match = false;
    // report the first differing coefficient after normalization
    Rat l1 = lhs.lex_leading_coeff();
    Rat l2 = rep.oracle_b.lex_leading_coeff();
    std::ostringstream os;
    os << "mismatch: closed form expands to " << lhs.to_string() << " but oracle computed "
       << rep.oracle_b.to_string();
    if (l1 != 0 && l2 != 0) {
        SparsePoly d = lhs * (Rat(1) / l1) - rep.oracle_b * (Rat(1) / l2);
        if (!d.is_zero())
            os << "; first differing (normalized) term: " << d.to_string();
    }
    rep.detail = os.str();
    return rep;
}

} // namespace qbf
