#pragma once

#include "qbf/bpoly.hpp"
#include "qbf/quiver.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qbf {

/// Mutable reduction state: an internal quiver whose vertices carry stable
/// ids (split copies get fresh ones), the dimension vector, and the weight
/// sigma-vectors (alpha / alpha* are recomputed on demand from sigma).
struct SliceState {
    struct SArrow {
        std::string id;
        int64_t tail; // internal vertex id
        int64_t head;
    };
    std::vector<int64_t> vids;
    std::vector<int64_t> orig; // provenance: original vertex index per vertex
    std::vector<int64_t> beta;
    std::vector<std::vector<int64_t>> sigmas; // [weight][vertex]
    std::vector<SArrow> arrows;
    int64_t next_vid = 0;
    int64_t next_arrow = 0;

    int idx(int64_t vid) const;
    Quiver as_quiver() const; // vertices = vids, same order
    std::vector<std::vector<int64_t>> alphas() const;
    std::vector<std::vector<int64_t>> alpha_stars() const;
    std::string render() const;
};

struct SliceStep {
    enum class Kind { Slice, DetSplit, SimplifyA, SimplifyB, Prune };
    Kind kind;
    std::string arrow_id;  // Slice/DetSplit
    int64_t vertex = -1;   // acting vertex (iso endpoint / simplified / dropped)
    int64_t other = -1;    // Slice: the non-isolated endpoint
    int64_t b1 = 0, b2 = 0;
    std::vector<int64_t> d; // per-weight bracket degrees
    FactorProduct factor;
    // simplify bookkeeping for locally_semisimple
    std::vector<std::pair<int64_t, int64_t>> copies; // (copy vid, beta at copy)
    bool vertex_dropped = false;
    int64_t dropped_dim = 0;
    bool other_removed = false;              // Slice: b1 == b2
    std::vector<int64_t> alpha_at_vertex;    // per weight, at simplify time
    std::string note;
    std::string state_after;
    std::optional<int64_t> alpha_selfpairing; // <alpha,alpha>, single-weight runs

    SliceStep(int nvars) : factor(nvars) {}
    std::string line(int nweights) const;
};

struct SliceTrace {
    std::vector<SliceStep> steps;
    std::string render() const;
};

struct NotSliceableInfo {
    std::string summary;
    std::vector<std::string> per_arrow; // Thm-style condition report per 1-arrow
};

struct SliceResult {
    bool ok = false;
    FactorProduct b;
    SliceTrace trace;
    NotSliceableInfo diagnostic;
    SliceResult() : b(1) {}
};

struct SliceOptions {
    std::vector<int64_t> m; // exponent tuple; defaults to all-ones
    bool randomize = false; // property-testing: random eligible-arrow choice
    uint64_t choice_seed = 0;
};

SliceState make_state(const Quiver& q, const DimVector& beta,
                      const std::vector<DimVector>& alphas);

/// Lemma-style simplification to a fixed point (rules (a) and (b'), pruning
/// of zero-dimensional and isolated vertices). Steps are appended to `trace`.
void prune_and_simplify(SliceState& st, SliceTrace& trace, int nweights);

/// One slice at an eligible arrow; returns the bracket factor and mutates the
/// state. Throws not_applicable with the reason if the arrow is ineligible.
SliceStep slice_step(SliceState& st, const std::string& arrow_id, const std::vector<int64_t>& m);

SliceResult run_slice(const Quiver& q, const DimVector& beta,
                      const std::vector<DimVector>& alphas, const SliceOptions& opt = {});

/// Locally semi-simple representative reconstructed from a successful trace:
/// list of (dimension vector on the original quiver, multiplicity).
struct LocSemisimple {
    bool supported = false;
    std::string reason; // when unsupported
    std::vector<std::pair<DimVector, int64_t>> summands;
};
LocSemisimple locally_semisimple(const Quiver& q, const DimVector& beta, const SliceTrace& trace);

} // namespace qbf
