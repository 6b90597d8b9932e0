#pragma once

#include "qbf/bpoly.hpp"
#include "qbf/quiver.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qbf {

/// Castling state: current quiver (original vertex ids), dimension vector and
/// sigma-weights. The accumulator times the current state's b-function is
/// invariant across steps.
struct ReflectState {
    Quiver quiver;                            // vertices carry original user ids
    DimVector beta;
    std::vector<DimVector> sigmas;
    std::vector<std::vector<int64_t>> alphas() const;
};

struct ReflectStep {
    enum class Kind { Castle, CastleDrop, IndependentDrop, ZeroDimDrop };
    Kind kind;
    int64_t vertex_id;
    int64_t r1 = 0, r2 = 0;
    std::vector<int64_t> d;
    FactorProduct factor; // already a ratio when r2 > 0
    std::string note;
    std::string state_after;
    ReflectStep(int nvars) : factor(nvars) {}
    std::string line() const;
};

struct ReflectTrace {
    std::vector<ReflectStep> steps;
    std::string render() const;
};

enum class ReflectDirection { Sink, Source, Auto };

struct ReflectOptions {
    std::vector<int64_t> m;
    ReflectDirection direction = ReflectDirection::Auto;
    int64_t max_reflections = 1000;
};

struct ReflectResult {
    bool ok = false;
    FactorProduct b;
    ReflectTrace trace;
    std::string fail_reason; // "cap" or "stuck (...)"
    ReflectResult() : b(1) {}
};

/// One castling step at a sink x (position in state.quiver). Appends to the
/// trace and mutates the state; returns the multiplied factor.
ReflectStep castle_step(ReflectState& st, int x, const std::vector<int64_t>& m);

ReflectResult run_reflect(const Quiver& q, const DimVector& beta,
                          const std::vector<DimVector>& alphas, const ReflectOptions& opt = {});

struct PreprojectiveResult {
    bool value = false;
    bool hit_cap = false;
};
PreprojectiveResult is_preprojective(const Quiver& q, const DimVector& alpha,
                                     int64_t cap = 1000);
PreprojectiveResult is_preinjective(const Quiver& q, const DimVector& alpha, int64_t cap = 1000);

} // namespace qbf
