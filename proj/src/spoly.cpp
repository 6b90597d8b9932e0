#include "qbf/spoly.hpp"

#include <algorithm>
#include <sstream>

namespace qbf {

SparsePoly SparsePoly::constant(int nvars, const Rat& c) {
    SparsePoly p(nvars);
    if (c != 0) p.terms_[Monomial(nvars, 0)] = c;
    return p;
}

SparsePoly SparsePoly::variable(int nvars, int index) {
    SparsePoly p(nvars);
    Monomial m(nvars, 0);
    m[index] = 1;
    p.terms_[m] = 1;
    return p;
}

SparsePoly SparsePoly::linear(int nvars, const std::vector<Int>& coeffs, const Rat& shift) {
    SparsePoly p(nvars);
    for (int i = 0; i < nvars; ++i) {
        if (coeffs[i] != 0) {
            Monomial m(nvars, 0);
            m[i] = 1;
            p.terms_[m] = Rat(coeffs[i]);
        }
    }
    if (shift != 0) p.terms_[Monomial(nvars, 0)] += shift;
    if (shift != 0 && p.terms_[Monomial(nvars, 0)] == 0) p.terms_.erase(Monomial(nvars, 0));
    return p;
}

bool SparsePoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == Monomial(nvars_, 0);
}

Rat SparsePoly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw invariant_violation("constant_value on non-constant polynomial");
    return terms_.begin()->second;
}

int SparsePoly::total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) {
        int t = 0;
        for (int e : m) t += e;
        d = std::max(d, t);
    }
    return d;
}

int SparsePoly::degree_in(int var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
}

void SparsePoly::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
    SparsePoly r = *this;
    r += o;
    return r;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
    SparsePoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
    SparsePoly r(nvars_);
    Monomial m(nvars_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            for (int i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

SparsePoly SparsePoly::operator*(const Rat& c) const {
    SparsePoly r(nvars_);
    if (c == 0) return r;
    for (const auto& [m, cc] : terms_) r.terms_[m] = cc * c;
    return r;
}

SparsePoly SparsePoly::pow(int e) const {
    SparsePoly r = constant(nvars_, 1);
    SparsePoly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = (e >>= 1) ? base * base : base;
    }
    return r;
}

SparsePoly SparsePoly::derivative(int var) const {
    SparsePoly r(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Monomial mm = m;
        mm[var] -= 1;
        r.add_term(mm, c * m[var]);
    }
    return r;
}

SparsePoly SparsePoly::apply_operator(const SparsePoly& op) const {
    SparsePoly r(nvars_);
    Monomial mm(nvars_);
    for (const auto& [g, cg] : op.terms()) {
        for (const auto& [m, c] : terms_) {
            bool ok = true;
            Rat factor = c * cg;
            for (int i = 0; i < nvars_ && ok; ++i) {
                if (m[i] < g[i]) {
                    ok = false;
                    break;
                }
                // falling factorial m .. m-g+1
                for (int k = 0; k < g[i]; ++k) factor *= (m[i] - k);
                mm[i] = m[i] - g[i];
            }
            if (ok) r.add_term(mm, factor);
        }
    }
    return r;
}

SparsePoly SparsePoly::divide_exact(const SparsePoly& divisor) const {
    if (divisor.is_zero()) throw invariant_violation("division by zero polynomial");
    SparsePoly rem = *this;
    SparsePoly quot(nvars_);
    // lex leading term of divisor
    const auto& lead = *divisor.terms_.rbegin();
    while (!rem.is_zero()) {
        const auto& rl = *rem.terms_.rbegin();
        Monomial q(nvars_);
        for (int i = 0; i < nvars_; ++i) {
            q[i] = rl.first[i] - lead.first[i];
            if (q[i] < 0) throw invariant_violation("inexact polynomial division");
        }
        Rat qc = rl.second / lead.second;
        SparsePoly qt(nvars_);
        qt.terms_[q] = qc;
        quot += qt;
        rem = rem - qt * divisor;
    }
    return quot;
}

Rat SparsePoly::eval(const std::vector<Rat>& point) const {
    Rat total = 0;
    for (const auto& [m, c] : terms_) {
        Rat v = c;
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < m[i]; ++k) v *= point[i];
        total += v;
    }
    return total;
}

SparsePoly SparsePoly::eval_poly(const std::vector<SparsePoly>& values, int out_nvars) const {
    SparsePoly total(out_nvars);
    for (const auto& [m, c] : terms_) {
        SparsePoly v = SparsePoly::constant(out_nvars, c);
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < m[i]; ++k) v = v * values[i];
        total += v;
    }
    return total;
}

Rat SparsePoly::lex_leading_coeff() const {
    if (terms_.empty()) return Rat(0);
    return terms_.rbegin()->second;
}

std::string SparsePoly::to_string(const std::vector<std::string>& varnames) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print highest lex term first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool any_var = false;
        std::ostringstream vars;
        for (int i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            if (any_var) vars << "*";
            any_var = true;
            if (i < (int)varnames.size())
                vars << varnames[i];
            else
                vars << "x" << i;
            if (m[i] > 1) vars << "^" << m[i];
        }
        if (!any_var) {
            os << rat_to_string(a);
        } else {
            if (a != 1) os << rat_to_string(a) << "*";
            os << vars.str();
        }
    }
    return os.str();
}

bool equal_up_to_scalar(const SparsePoly& p, const SparsePoly& q, Rat* lambda) {
    if (p.is_zero() || q.is_zero()) {
        if (lambda) *lambda = 0;
        return p.is_zero() && q.is_zero();
    }
    if (p.nvars() != q.nvars() || p.term_count() != q.term_count()) return false;
    // normalize both by the lexicographically-leading coefficient
    Rat lam = p.lex_leading_coeff() / q.lex_leading_coeff();
    auto ip = p.terms().begin();
    auto iq = q.terms().begin();
    for (; ip != p.terms().end(); ++ip, ++iq) {
        if (ip->first != iq->first) return false;
        if (ip->second != lam * iq->second) return false;
    }
    if (lambda) *lambda = lam;
    return true;
}

std::vector<Rat> rational_roots(const SparsePoly& p) {
    if (p.nvars() != 1) throw invariant_violation("rational_roots expects a univariate polynomial");
    // dense coefficients
    int deg = p.degree_in(0);
    std::vector<Rat> coeff(deg + 1, Rat(0));
    for (const auto& [m, c] : p.terms()) coeff[m[0]] = c;
    // clear denominators -> integer coefficients
    Int den = 1;
    for (const auto& c : coeff) den = lcm(den, denominator(c));
    std::vector<Int> ic(deg + 1);
    for (int i = 0; i <= deg; ++i) ic[i] = numerator(coeff[i] * Rat(den));

    std::vector<Rat> roots;
    // strip zero roots
    int low = 0;
    while (low <= deg && ic[low] == 0) {
        roots.push_back(Rat(0));
        ++low;
    }
    std::vector<Int> cur(ic.begin() + low, ic.end());
    auto divisors = [](Int n) {
        n = abs(n);
        std::vector<Int> ds;
        for (Int d = 1; d * d <= n; ++d)
            if (n % d == 0) {
                ds.push_back(d);
                if (d * d != n) ds.push_back(n / d);
            }
        return ds;
    };
    while (cur.size() > 1) {
        std::vector<Int> ps = divisors(cur.front());
        std::vector<Int> qs = divisors(cur.back());
        bool found = false;
        for (const Int& pn : ps) {
            for (const Int& qn : qs) {
                for (int sign = 0; sign < 2 && !found; ++sign) {
                    Rat cand = Rat(sign ? -pn : pn, qn);
                    // synthetic evaluation and deflation
                    Rat acc = 0;
                    for (int i = (int)cur.size() - 1; i >= 0; --i) acc = acc * cand + Rat(cur[i]);
                    if (acc != 0) continue;
                    roots.push_back(cand);
                    // deflate: cur / (x - cand) exactly
                    std::vector<Rat> quot(cur.size() - 1);
                    Rat carry = Rat(cur.back());
                    for (int i = (int)cur.size() - 2; i >= 0; --i) {
                        quot[i] = carry;
                        carry = Rat(cur[i]) + carry * cand;
                    }
                    Int d2 = 1;
                    for (const auto& c : quot) d2 = lcm(d2, denominator(c));
                    cur.resize(quot.size());
                    for (size_t i = 0; i < quot.size(); ++i) cur[i] = numerator(quot[i] * Rat(d2));
                    found = true;
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) throw not_applicable("polynomial has a non-rational root");
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace qbf
