#pragma once

#include "qbf/quiver.hpp"
#include "qbf/reflect.hpp"
#include "qbf/slice.hpp"
#include "qbf/weyl.hpp"

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

namespace qbf {

/// Parsed problem file. Line-oriented grammar ('#' comments):
///   vertices <n>
///   arrow <id>: <tail> -> <head>
///   beta <n ints>
///   alpha <n ints> | alphastar <n ints> | sigma <n ints>   (repeatable)
///   m <l ints>
struct ProblemFile {
    Quiver quiver;
    DimVector beta;
    std::vector<DimVector> alphas; // converted to alpha form
    std::vector<int64_t> m;        // empty = all ones

    std::string render() const;
};

ProblemFile parse_problem(const std::string& text);

// --- result plumbing shared by the CLI and the bindings ---

struct BfnOutcome {
    std::string method; // "slice" or "reflect"
    bool ok = false;
    FactorProduct b;
    std::string trace_text;
    std::string diagnostic; // not-sliceable / fail reason
    std::vector<std::string> diagnostic_detail;
    BfnOutcome() : b(1) {}
};

nlohmann::json factor_product_json(const FactorProduct& p);
nlohmann::json slice_trace_json(const SliceTrace& t);
nlohmann::json reflect_trace_json(const ReflectTrace& t);
nlohmann::json outcome_json(const BfnOutcome& o);

BfnOutcome run_slice_outcome(const ProblemFile& p, bool randomize = false, uint64_t seed = 42);
BfnOutcome run_reflect_outcome(const ProblemFile& p, ReflectDirection dir, int64_t max_reflections);

/// Build the Schofield polynomials f_i = c^{V_i} for the problem's weights
/// (random exceptional V_i from the seed).
std::vector<SparsePoly> problem_polynomials(const ProblemFile& p, uint64_t seed);

} // namespace qbf
