#pragma once

#include "deadbeat/coupling.hpp"
#include "deadbeat/matrix.hpp"

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

namespace deadbeat {

struct KronFactors {
    CouplingMatrix g;
    RationalMatrix q_factor;
};

/// Linear map on stacked outputs (q agents, m outputs each) that preserves
/// the diagonal and drives every stack onto it within `horizon` steps.
/// kron_form records the G (x) Q factorization when the map was built that
/// way; general maps need not admit one.
struct LinearInterconnection {
    RationalMatrix gamma;
    std::size_t q = 0;
    std::size_t m = 0;
    std::size_t horizon = 0;
    std::optional<KronFactors> kron_form;
};

/// Componentwise map y_i -> cbrt(sum_j g_ij y_j^3) for scalar outputs;
/// conjugate to the coupling matrix under elementwise cubing, hence deadbeat
/// with the coupling's horizon.
struct CubeInterconnection {
    CouplingMatrix g;
};

using Interconnection = std::variant<LinearInterconnection, CubeInterconnection>;

std::size_t agent_count(const Interconnection& ic);
std::size_t output_dim(const Interconnection& ic);
std::size_t horizon(const Interconnection& ic);

/// Block rows (I_m, -I_m) at consecutive agent positions; its null space is
/// exactly the diagonal of stacked output space. Shape ((q-1)m) x (qm).
RationalMatrix disagreement_matrix(std::size_t q, std::size_t m);

/// Embedding of one output into the diagonal: ones(q,1) (x) I_m.
RationalMatrix diagonal_embedding(std::size_t q, std::size_t m);

/// Smallest r >= 1 with D * gamma^r = 0; also checks diagonal invariance
/// D * gamma * E = 0. Throws Error(diagonal_not_invariant) or
/// Error(not_deadbeat) when gamma fails either condition within qm steps.
std::size_t linear_horizon(const RationalMatrix& gamma, std::size_t q, std::size_t m);
std::size_t linear_horizon(const LinearInterconnection& ic);

Interconnection kron_interconnection(const CouplingMatrix& g, const RationalMatrix& qmat);
Interconnection raw_linear_interconnection(const RationalMatrix& gamma, std::size_t q, std::size_t m);
Interconnection cube_interconnection(const CouplingMatrix& g);

/// Directed-tree coupling: each agent copies its parent's output block and
/// the single root copies itself. parent[i] is the parent index or nullopt
/// for the root. Horizon equals the tree depth (at least 1).
Interconnection tree_interconnection(const std::vector<std::optional<std::size_t>>& parent, std::size_t m = 1);

/// Matrix whose null space is the set of stacks driven onto the diagonal by
/// sigma applications of gamma: D * gamma^sigma (sigma = 0 gives D itself).
RationalMatrix y_sigma_matrix(const LinearInterconnection& ic, std::size_t sigma);

/// Exact test of the horizon-p output-prediction closure property for a
/// linear pair (A, C) against a linear interconnection: for every sigma in
/// 1..r, stacks whose first p output predictions are driven onto the
/// diagonal by gamma^sigma must have their p-th prediction driven there too.
bool check_linear_compatibility(const RationalMatrix& a, const RationalMatrix& c, const LinearInterconnection& ic,
                                std::size_t p);

/// The cube-power interconnection is compatible with the cube family by
/// construction; this verifies the supporting closure property on sampled
/// members of each null space N(G^sigma - 1*l^T).
bool check_cube_compatibility(const CouplingMatrix& g, std::size_t samples = 20, double tol = 1e-9,
                              std::uint64_t seed = 20240901);

/// Applies the interconnection to a stacked output vector.
RationalVector apply_exact(const LinearInterconnection& ic, const RationalVector& stacked);
RealVector apply_interconnection(const Interconnection& ic, const RealVector& stacked);

}  // namespace deadbeat
