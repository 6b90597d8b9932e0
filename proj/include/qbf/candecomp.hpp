#pragma once

#include "qbf/quiver.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qbf {

/// Canonical decomposition: list of (positive root, multiplicity) with
/// sum mult*root = beta.
struct Decomposition {
    std::vector<std::pair<DimVector, int64_t>> summands;
    bool same_multiset(const Decomposition& o) const;
    std::string to_string() const;
};

/// Numeric ground truth: sample a random representation, solve the
/// triangular Hom-counting system over all positive roots, certify with a
/// second seed.
Decomposition generic_decomposition(const Quiver& q, const DimVector& beta, uint64_t seed);

/// Type-A decomposition ordered to satisfy the diagram conditions
/// (first class receives maps from the second class, never conversely).
struct AnOrdered {
    Decomposition ordered;                                 // second, first, z classes in order
    std::vector<std::pair<DimVector, int64_t>> second_class;
    std::vector<std::pair<DimVector, int64_t>> first_class;
    std::vector<std::pair<DimVector, int64_t>> z_class;    // dimension 0 at vertex 2
};
AnOrdered an_decomposition(const Quiver& q, const DimVector& beta, uint64_t seed);

/// One diagram row between the horizontal lines: first-class interval (may be
/// empty), optional merged second-class interval, always one S_n circle.
struct DnDiagram {
    int chain_len = 0; // n-1
    std::vector<DimVector> above;                       // unmoved second-class rows
    struct Row {
        DimVector first;  // zeros when the row was opened by an extra circle
        DimVector moved;  // merged second-class content (zeros if none)
    };
    std::vector<Row> between;                           // rows carrying a circle
    std::vector<DimVector> below_first;                 // first-class rows without a circle
    std::vector<std::pair<DimVector, int64_t>> zrows;   // set-aside rows
    std::string render() const;
};

struct DnResult {
    Decomposition decomposition; // on the original quiver's vertex order
    DnDiagram diagram;
};

/// Appendix diagram algorithm for D_n quivers (any labeling; normalized
/// internally, passing to the opposite quiver when the short arrow points
/// into the branch vertex). Always cross-checked against
/// generic_decomposition; raises on disagreement.
DnResult dn_canonical(const Quiver& q, const DimVector& beta, uint64_t seed);

/// Test helper: sum check, root membership, pairwise generic Ext vanishing.
void verify_decomposition(const Quiver& q, const DimVector& beta, const Decomposition& dec,
                          uint64_t seed);

} // namespace qbf
