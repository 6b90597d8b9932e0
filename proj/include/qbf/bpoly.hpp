#pragma once

#include "qbf/rational.hpp"
#include "qbf/spoly.hpp"

#include <map>
#include <string>
#include <vector>

namespace qbf {

/// One affine-linear factor d1*s1 + ... + dl*sl + c with d >= 0 componentwise
/// and not all zero. Stored primitive: gcd of the d_i and of the shift's
/// numerator is pulled into the product scalar.
struct LinearFactor {
    std::vector<int64_t> coeffs;
    Rat shift;

    bool operator<(const LinearFactor& o) const {
        if (coeffs != o.coeffs) return coeffs < o.coeffs;
        return shift < o.shift;
    }
    bool operator==(const LinearFactor& o) const {
        return coeffs == o.coeffs && shift == o.shift;
    }
    std::string to_string(int nvars) const;
};

/// Signed multiset of linear factors with a nonzero rational scalar in front.
/// is_polynomial() iff no factor has negative multiplicity.
class FactorProduct {
public:
    explicit FactorProduct(int nvars = 1) : nvars_(nvars) {}

    static FactorProduct unit(int nvars) { return FactorProduct(nvars); }

    int nvars() const { return nvars_; }
    const Rat& scalar() const { return scalar_; }
    const std::map<LinearFactor, int64_t>& factors() const { return factors_; }

    bool is_unit() const { return factors_.empty() && scalar_ == 1; }
    bool is_polynomial() const;
    int degree() const; // sum of positive multiplicities minus nothing; requires polynomial

    void mul_factor(const std::vector<int64_t>& coeffs, const Rat& shift, int64_t mult);
    void mul_scalar(const Rat& c);

    FactorProduct operator*(const FactorProduct& o) const;
    FactorProduct operator/(const FactorProduct& o) const;
    bool operator==(const FactorProduct& o) const {
        return nvars_ == o.nvars_ && scalar_ == o.scalar_ && factors_ == o.factors_;
    }

    /// Expansion to a dense polynomial in s1..sl. Requires is_polynomial().
    SparsePoly expand() const;

    /// All shifts positive (roots of every factor negative).
    bool all_shifts_positive() const;

    std::string to_string() const;

private:
    int nvars_;
    Rat scalar_ = 1;
    std::map<LinearFactor, int64_t> factors_;
};

/// Bracket [s]^{d1..dl}_{a,b} = prod_{i=b-a+1}^{b} prod_{j=0}^{D-1}
/// (d1 s1+...+dl sl + i + j) with D = m1 d1 + ... + ml dl.
/// a=0 or D=0 gives the unit.
FactorProduct bracket(const std::vector<int64_t>& d, const std::vector<int64_t>& m, int64_t a,
                      int64_t b);

/// Bracket display string, e.g. "[s]^{2}_{1,3}" or "[s]^{1,0}_{2}".
std::string bracket_to_string(const std::vector<int64_t>& d, int64_t a, int64_t b);

/// p == lambda*q for nonzero rational lambda? Works factor-wise when both are
/// factored; compares expansions otherwise.
bool equal_up_to_scalar(const FactorProduct& p, const FactorProduct& q, Rat* lambda = nullptr);
bool equal_up_to_scalar(const FactorProduct& p, const SparsePoly& q, Rat* lambda = nullptr);

} // namespace qbf
