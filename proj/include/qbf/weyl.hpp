#pragma once

#include "qbf/bpoly.hpp"
#include "qbf/spoly.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qbf {

inline constexpr int64_t kDefaultOracleBudget = 64;

/// Brute-force b-function: applies the dual operator (coefficients are
/// rational, so the dual substitutes each variable by its partial derivative)
/// to integer powers, divides exactly, and interpolates b from the values on
/// the simplex grid {N : sum N_i <= deg}. Refuses when
/// sum m_i * deg(f_i)^2 exceeds the budget.
SparsePoly bfunction_oracle(const std::vector<SparsePoly>& fs, const std::vector<int64_t>& m,
                            int64_t budget = kDefaultOracleBudget);

/// a_k(s) = f_k(A0) * f_k(sum_i s_i grad log f_i(A0)); requires f_i(A0) != 0.
std::vector<SparsePoly> afunction(const std::vector<SparsePoly>& fs, const std::vector<Rat>& a0);

struct VerifyReport {
    bool match = false;
    Rat scalar = 0;
    std::string detail;
    SparsePoly oracle_b;
};

/// Compare a closed-form factored b-function against the oracle.
VerifyReport verify_against_oracle(const FactorProduct& closed, const std::vector<SparsePoly>& fs,
                                   const std::vector<int64_t>& m,
                                   int64_t budget = kDefaultOracleBudget);

} // namespace qbf
