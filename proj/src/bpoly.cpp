#include "qbf/bpoly.hpp"

#include <numeric>
#include <sstream>

namespace qbf {

std::string LinearFactor::to_string(int nvars) const {
    std::ostringstream os;
    os << "(";
    bool any = false;
    for (int i = 0; i < nvars; ++i) {
        if (!coeffs[i]) continue;
        if (any) os << "+";
        if (coeffs[i] != 1) os << coeffs[i] << "*";
        os << "s" << (nvars > 1 ? std::to_string(i + 1) : "");
        any = true;
    }
    if (!any) os << "0";
    if (shift > 0) os << "+" << rat_to_string(shift);
    else if (shift < 0) os << "-" << rat_to_string(-shift);
    os << ")";
    return os.str();
}

bool FactorProduct::is_polynomial() const {
    for (const auto& [f, m] : factors_)
        if (m < 0) return false;
    return true;
}

int FactorProduct::degree() const {
    if (!is_polynomial()) throw invariant_violation("degree of a non-polynomial factor product");
    int64_t d = 0;
    for (const auto& [f, m] : factors_) d += m;
    return (int)d;
}

void FactorProduct::mul_factor(const std::vector<int64_t>& coeffs, const Rat& shift, int64_t mult) {
    if ((int)coeffs.size() != nvars_) throw invariant_violation("factor arity mismatch");
    if (mult == 0) return;
    bool allzero = true;
    for (auto c : coeffs) {
        if (c < 0) throw invariant_violation("negative coefficient in linear factor");
        if (c) allzero = false;
    }
    if (allzero) {
        // constant "factor": fold into the scalar
        if (shift == 0) throw invariant_violation("zero factor in product");
        Rat p = 1;
        for (int64_t k = 0; k < (mult > 0 ? mult : -mult); ++k) p *= shift;
        if (mult > 0) scalar_ *= p;
        else scalar_ /= p;
        return;
    }
    // normalize to primitive: clear the shift denominator, then divide the
    // integer content out (it moves into the scalar)
    Int q = denominator(shift);
    Int g = 0;
    for (auto c : coeffs) g = gcd(g, Int(c) * q);
    g = gcd(g, numerator(shift));
    if (g == 0) g = 1;
    LinearFactor f;
    f.coeffs.resize(nvars_);
    Rat scale(g, q);
    for (int i = 0; i < nvars_; ++i) f.coeffs[i] = (int64_t)(Int(coeffs[i]) * q / g);
    f.shift = shift / scale;
    Rat p = 1;
    for (int64_t k = 0; k < (mult > 0 ? mult : -mult); ++k) p *= scale;
    if (mult > 0) scalar_ *= p;
    else scalar_ /= p;
    auto it = factors_.find(f);
    if (it == factors_.end()) factors_.emplace(f, mult);
    else {
        it->second += mult;
        if (it->second == 0) factors_.erase(it);
    }
}

void FactorProduct::mul_scalar(const Rat& c) {
    if (c == 0) throw invariant_violation("zero scalar in factor product");
    scalar_ *= c;
}

FactorProduct FactorProduct::operator*(const FactorProduct& o) const {
    FactorProduct r = *this;
    r.scalar_ *= o.scalar_;
    for (const auto& [f, m] : o.factors_) {
        auto it = r.factors_.find(f);
        if (it == r.factors_.end()) r.factors_.emplace(f, m);
        else {
            it->second += m;
            if (it->second == 0) r.factors_.erase(it);
        }
    }
    return r;
}

FactorProduct FactorProduct::operator/(const FactorProduct& o) const {
    FactorProduct r = *this;
    r.scalar_ /= o.scalar_;
    for (const auto& [f, m] : o.factors_) {
        auto it = r.factors_.find(f);
        if (it == r.factors_.end()) r.factors_.emplace(f, -m);
        else {
            it->second -= m;
            if (it->second == 0) r.factors_.erase(it);
        }
    }
    return r;
}

SparsePoly FactorProduct::expand() const {
    if (!is_polynomial())
        throw invariant_violation("expand called on a product with negative multiplicities");
    SparsePoly p = SparsePoly::constant(nvars_, scalar_);
    for (const auto& [f, m] : factors_) {
        std::vector<Int> cs(f.coeffs.begin(), f.coeffs.end());
        SparsePoly lin = SparsePoly::linear(nvars_, cs, f.shift);
        for (int64_t k = 0; k < m; ++k) p = p * lin;
    }
    return p;
}

bool FactorProduct::all_shifts_positive() const {
    for (const auto& [f, m] : factors_)
        if (f.shift <= 0) return false;
    return true;
}

std::string FactorProduct::to_string() const {
    std::ostringstream os;
    if (factors_.empty()) return rat_to_string(scalar_);
    if (scalar_ != 1) os << rat_to_string(scalar_) << " * ";
    bool first = true;
    for (const auto& [f, m] : factors_) {
        if (!first) os << " ";
        first = false;
        os << f.to_string(nvars_);
        if (m != 1) os << "^" << m;
    }
    return os.str();
}

FactorProduct bracket(const std::vector<int64_t>& d, const std::vector<int64_t>& m, int64_t a,
                      int64_t b) {
    if (a > b) throw input_error("bracket requires a <= b");
    if (a < 0) throw input_error("bracket requires a >= 0");
    int l = (int)d.size();
    for (auto v : d)
        if (v < 0) throw input_error("bracket requires d >= 0 componentwise");
    int64_t D = 0;
    for (int i = 0; i < l; ++i) D += m[i] * d[i];
    FactorProduct p(l);
    if (a == 0 || D == 0) return p;
    for (int64_t i = b - a + 1; i <= b; ++i)
        for (int64_t j = 0; j < D; ++j) p.mul_factor(d, Rat(i + j), 1);
    return p;
}

std::string bracket_to_string(const std::vector<int64_t>& d, int64_t a, int64_t b) {
    std::ostringstream os;
    os << "[s]";
    bool alld1 = true;
    for (auto v : d) alld1 &= (v == 1);
    if (!(alld1 && d.size() == 1)) {
        os << "^{";
        for (size_t i = 0; i < d.size(); ++i) {
            if (i) os << ",";
            os << d[i];
        }
        os << "}";
    }
    os << "_{" << a;
    if (a != b) os << "," << b;
    os << "}";
    return os.str();
}

bool equal_up_to_scalar(const FactorProduct& p, const FactorProduct& q, Rat* lambda) {
    if (p.nvars() != q.nvars()) return false;
    if (p.factors() == q.factors()) {
        if (lambda) *lambda = p.scalar() / q.scalar();
        return true;
    }
    // factored forms may differ (e.g. one side expanded differently); compare expansions
    if (p.is_polynomial() && q.is_polynomial())
        return equal_up_to_scalar(p.expand(), q.expand(), lambda);
    FactorProduct r = p / q;
    if (!r.factors().empty()) return false;
    if (lambda) *lambda = r.scalar();
    return true;
}

bool equal_up_to_scalar(const FactorProduct& p, const SparsePoly& q, Rat* lambda) {
    return equal_up_to_scalar(p.expand(), q, lambda);
}

} // namespace qbf
