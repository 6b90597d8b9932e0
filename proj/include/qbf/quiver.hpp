#pragma once

#include "qbf/matrix.hpp"
#include "qbf/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qbf {

using DimVector = std::vector<int64_t>; // per-vertex integers (beta / alpha / sigma)

struct Arrow {
    std::string id;
    int tail = 0; // index into Quiver::vertices
    int head = 0;
};

/// Finite quiver without oriented cycles. Vertices carry user ids (ints in
/// the file format); arrows carry string ids. Parallel arrows are allowed,
/// loops are not.
struct Quiver {
    std::vector<int64_t> vertices; // user-visible vertex ids, in declared order
    std::vector<Arrow> arrows;

    int n() const { return (int)vertices.size(); }
    int vertex_index(int64_t user_id) const;

    /// Number of arrows x -> y (by internal index).
    int arrow_mult(int x, int y) const;
    /// Undirected edge multiplicity between x and y.
    int edge_mult(int x, int y) const;
    int degree(int x) const;
    bool is_sink(int x) const;
    bool is_source(int x) const;

    Quiver opposite() const;
};

struct QuiverViolation {
    std::string message;
};

/// Returns a topological order (internal indices) on success; the violation
/// list otherwise (cycles, loops, duplicate ids, bad endpoints).
struct ValidationResult {
    bool ok = false;
    std::vector<int> topo_order;
    std::vector<QuiverViolation> violations;
};
ValidationResult validate_quiver(const Quiver& q);

/// Euler matrix E = I - A with A[x][y] = #arrows x->y.
IntMat euler_matrix(const Quiver& q);

/// <alpha, beta> = sum_x a_x b_x - sum_arrows a_ta b_ha.
Int euler_form(const Quiver& q, const DimVector& alpha, const DimVector& beta);

enum class WeightKind { Alpha, Sigma, AlphaStar };

/// All three incarnations of a weight: sigma = E^T alpha = -E alpha*.
struct Weights {
    DimVector alpha;
    DimVector sigma;
    DimVector alpha_star;
};
Weights convert_weight(const Quiver& q, WeightKind kind, const DimVector& given);

DimVector sigma_from_alpha(const Quiver& q, const DimVector& alpha);
DimVector alpha_from_sigma(const Quiver& q, const DimVector& sigma);
DimVector alphastar_from_sigma(const Quiver& q, const DimVector& sigma);
DimVector sigma_from_alphastar(const Quiver& q, const DimVector& astar);

Int sigma_pairing(const DimVector& sigma, const DimVector& beta);

/// Reflection at a sink or source: reverses all arrows at x and applies
/// c_x to beta and each listed alpha-vector. Throws if x is neither.
struct VertexReflection {
    Quiver quiver;
    DimVector beta;
    std::vector<DimVector> alphas;
};
VertexReflection reflect(const Quiver& q, int x, const DimVector& beta,
                      const std::vector<DimVector>& alphas);

/// c_x on a single vector (uses undirected edge multiplicities).
DimVector reflect_vector(const Quiver& q, int x, const DimVector& v);

/// Coxeter transformation c = -E^{-1} E^T.
IntMat coxeter_matrix(const Quiver& q);

enum class QuiverClass { Dynkin, Euclidean, Other };

struct Classification {
    QuiverClass kind = QuiverClass::Other;
    std::string subtype; // e.g. "A3", "D4", "E6", "~A1", "~D4"
    bool connected = true;
};
/// Classification of the underlying undirected multigraph (per component;
/// the returned record describes the whole quiver, subtype set only when
/// connected).
Classification classify(const Quiver& q);
std::vector<Classification> classify_components(const Quiver& q);

/// Coxeter number for a Dynkin quiver (A_n: n+1, D_n: 2n-2, E6/7/8: 12/18/30).
int coxeter_number(const Classification& c);

/// All positive roots of a (connected) Dynkin quiver, as dimension vectors.
/// Deterministic order (lexicographic).
std::vector<DimVector> positive_roots(const Quiver& q);

/// d(P_x): number of paths from x to each vertex (projective dimension vector).
DimVector projective_dim_vector(const Quiver& q, int x);

std::string dimvec_to_string(const DimVector& v);

} // namespace qbf
