#pragma once

#include "qbf/matrix.hpp"
#include "qbf/quiver.hpp"
#include "qbf/spoly.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace qbf {

/// Concrete representation: one integer matrix per arrow, shape
/// (dim head) x (dim tail) for the fixed dimension vector.
struct Representation {
    DimVector dims;
    std::vector<IntMat> mats; // parallel to Quiver::arrows

    void check_shapes(const Quiver& q) const;
};

/// Uniform integer entries in [-99, 99].
Representation random_representation(const Quiver& q, const DimVector& dims, uint64_t seed);

/// dim Hom(V, W) = sum_x a_x b_x - rank d^V_W, computed from the block matrix
/// of the canonical four-term sequence. `fast` switches the rank to the
/// dual-prime modular path (used by the decomposition oracle on large input).
int hom_dim(const Quiver& q, const Representation& V, const Representation& W, bool fast = false);

struct HomExt {
    int hom = 0;
    int ext = 0;
};

/// Generic hom/ext dimensions for dimension vectors alpha, beta: sampled at
/// random representations, certified by agreement across two derived seeds
/// (up to 3 retries). hom - ext = <alpha,beta> always.
HomExt generic_hom_ext(const Quiver& q, const DimVector& alpha, const DimVector& beta,
                       uint64_t seed);

/// Random exceptional representation of a real Schur root (certified by
/// Ext(V,V) = 0; <alpha,alpha> = 1 checked up front). <= 3 resamples.
Representation random_exceptional(const Quiver& q, const DimVector& alpha, uint64_t seed);

/// The Schofield block matrix d^V_W with W generic: rows indexed by arrows
/// (blocks I_{a_ta} (x) W(a) in column ta, V(a)^t (x) I_{b_ha} in column ha,
/// minus sign dropped), entries symbolic in the W-variables.
struct SchofieldSystem {
    int nvars = 0;                                   // number of W-variables
    std::vector<std::string> varnames;               // "x<arrowid>_<i>_<j>"
    std::vector<std::vector<SparsePoly>> block;      // square matrix of entries
    SparsePoly f;                                    // det (0 iff generic Hom(V,.) != 0)
};

/// Requires <alpha, beta> = 0 (square grid).
SchofieldSystem build_schofield(const Quiver& q, const DimVector& beta, const Representation& V);

/// Map a concrete representation of dimension beta to the variable order used
/// by build_schofield (for evaluating f at a point).
std::vector<Rat> flatten_point(const Quiver& q, const DimVector& beta,
                               const std::vector<std::vector<std::vector<Rat>>>& per_arrow);

/// Deterministic sub-seed derivation.
uint64_t derive_seed(uint64_t seed, uint64_t salt);

} // namespace qbf
