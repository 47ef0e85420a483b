#pragma once

#include "deadbeat/coupling.hpp"
#include "deadbeat/families.hpp"
#include "deadbeat/interconnect.hpp"
#include "deadbeat/matrix.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <variant>
#include <vector>

namespace deadbeat {

/// Linear agent x+ = Ax + L(w - y), y = Cx, stepped exactly.
struct LinearDynamics {
    RationalMatrix a;
    RationalMatrix c;
    RationalMatrix l;
};

/// Nonlinear agent x+ = observer_step(x, w), stepped in floating point.
struct FamilyDynamics {
    SystemFamily family;
};

struct ArraySpec {
    std::size_t q = 0;
    std::variant<LinearDynamics, FamilyDynamics> dynamics;
    Interconnection ic;
    std::vector<RationalVector> initial_exact;  // linear mode
    std::vector<RealVector> initial;            // family mode
};

struct Trajectory {
    std::size_t q = 0;
    std::size_t n = 0;
    /// steps[k][i] is agent i's state at time k (floating-point view).
    std::vector<std::vector<RealVector>> steps;
    /// Populated only for exact (linear) stepping; same indexing.
    std::vector<std::vector<RationalVector>> exact_steps;
    bool diverged = false;
    std::size_t diverged_at = 0;

    bool exact() const noexcept { return !exact_steps.empty(); }
};

struct SyncReport {
    std::optional<std::size_t> measured_tau;
    std::size_t bound_tau = 0;  // r*p when applicable, 0 otherwise
    double tol = 0.0;
    std::vector<double> per_step_disagreement;
};

/// Steps the coupled array k_max times (k_max+1 snapshots). Linear dynamics
/// run in exact arithmetic and require a linear interconnection; family
/// dynamics run in floating point and record (not throw) divergence when a
/// component passes 1e12 in magnitude.
Trajectory simulate(const ArraySpec& spec, std::size_t k_max);

/// First step after which the worst pairwise state disagreement stays within
/// tol through the end of the trajectory. With tol = 0 on an exact
/// trajectory the comparison is exact. Throws Error(diverged_trajectory).
SyncReport measure_sync(const Trajectory& traj, double tol, std::size_t bound_tau = 0);

/// Closed-loop matrix of the coupled observer array in stacked coordinates:
/// (I_q x A)(I + (I_q x H)(gamma - I)(I_q x C)).
RationalMatrix build_phi(const RationalMatrix& a, const RationalMatrix& c, const RationalMatrix& h_gain,
                         const LinearInterconnection& ic, std::size_t q);

struct LinearSyncBoundReport {
    std::size_t trials = 0;
    std::size_t bound_tau = 0;
    std::size_t worst_tau = 0;
    bool horizon_ok = false;
    bool post_sync_law_ok = false;

    bool passed() const noexcept { return horizon_ok && post_sync_law_ok; }
};

/// Exact randomized check that the linear array with interconnection G (x) Q
/// synchronizes by step r*p and thereafter follows
/// (A + LQC - LC)^k applied to the consensus-weighted initial state.
/// Requires A - LC nilpotent (Error(nilpotency_precondition_failed)).
LinearSyncBoundReport verify_linear_sync_bound(const RationalMatrix& a, const RationalMatrix& c, const RationalMatrix& l,
                               const CouplingMatrix& g, const RationalMatrix& qmat, std::size_t trials,
                               std::uint64_t seed);

/// Convenience overload: unwraps a Kronecker-structured linear
/// interconnection, rejecting anything else with
/// Error(unsupported_interconnection).
LinearSyncBoundReport verify_linear_sync_bound(const RationalMatrix& a, const RationalMatrix& c, const RationalMatrix& l,
                               const Interconnection& ic, std::size_t trials, std::uint64_t seed);

struct CubeSyncBoundReport {
    std::size_t trials = 0;
    std::size_t diverged = 0;
    std::size_t bound_tau = 0;
    std::optional<std::size_t> worst_tau;
    double tol = 0.0;
    bool horizon_ok = false;

    bool passed() const noexcept { return horizon_ok && diverged == 0; }
};

/// Randomized float check that the cube-family array under the cube-power
/// interconnection synchronizes by step r*p within tol. Only the cube family
/// carries the closure property, so other families are rejected.
CubeSyncBoundReport verify_cube_sync_bound(const SystemFamily& family, const CouplingMatrix& g, std::size_t trials,
                               std::uint64_t seed, double tol);

/// CSV schema: step,agent,component_1..component_n.
void write_trajectory_csv(std::ostream& out, const Trajectory& traj);

void write_sync_report(std::ostream& out, const SyncReport& report);

}  // namespace deadbeat
