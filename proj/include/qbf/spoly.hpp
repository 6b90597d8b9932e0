#pragma once

#include "qbf/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace qbf {

// Exponent vector for a monomial; length = number of variables of the poly.
using Monomial = std::vector<int>;

/// Exact sparse multivariate polynomial over the rationals.
/// Terms are kept in a map keyed by exponent vector; zero coefficients are
/// never stored.
class SparsePoly {
public:
    SparsePoly() = default;
    explicit SparsePoly(int nvars) : nvars_(nvars) {}

    static SparsePoly constant(int nvars, const Rat& c);
    static SparsePoly variable(int nvars, int index);
    // d1*x1 + ... + dn*xn + c
    static SparsePoly linear(int nvars, const std::vector<Int>& coeffs, const Rat& shift);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_value() const; // requires is_constant()
    int total_degree() const;
    int degree_in(int var) const;
    size_t term_count() const { return terms_.size(); }

    const std::map<Monomial, Rat>& terms() const { return terms_; }

    void add_term(const Monomial& m, const Rat& c);

    SparsePoly operator+(const SparsePoly& o) const;
    SparsePoly operator-(const SparsePoly& o) const;
    SparsePoly operator*(const SparsePoly& o) const;
    SparsePoly operator*(const Rat& c) const;
    SparsePoly& operator+=(const SparsePoly& o);
    bool operator==(const SparsePoly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

    SparsePoly pow(int e) const;

    /// Partial derivative d/dx_var.
    SparsePoly derivative(int var) const;

    /// Apply the constant-coefficient operator op(d/dx) to this polynomial:
    /// each monomial of `op` acts as the corresponding mixed partial.
    SparsePoly apply_operator(const SparsePoly& op) const;

    /// Exact division; throws invariant_violation if the remainder is nonzero.
    SparsePoly divide_exact(const SparsePoly& divisor) const;

    /// Evaluate at a rational point.
    Rat eval(const std::vector<Rat>& point) const;

    /// Evaluate substituting a polynomial (in another variable set) per variable.
    SparsePoly eval_poly(const std::vector<SparsePoly>& values, int out_nvars) const;

    /// Leading coefficient under lexicographic monomial order.
    Rat lex_leading_coeff() const;

    std::string to_string(const std::vector<std::string>& varnames = {}) const;

private:
    int nvars_ = 0;
    std::map<Monomial, Rat> terms_;
};

/// true iff p == lambda*q for a nonzero rational lambda; lambda reported.
bool equal_up_to_scalar(const SparsePoly& p, const SparsePoly& q, Rat* lambda = nullptr);

/// Factor a univariate polynomial with all-rational roots into linear factors.
/// Returns the roots (with multiplicity); throws not_applicable if an
/// irreducible nonlinear part remains.
std::vector<Rat> rational_roots(const SparsePoly& p);

} // namespace qbf
