#include "deadbeat/array_sim.hpp"

#include "deadbeat/errors.hpp"
#include "deadbeat/rng.hpp"

#include <cmath>
#include <ostream>
#include <string>

namespace deadbeat {

namespace {

constexpr double kDivergenceGuard = 1e12;

std::vector<RealVector> to_real_snapshot(const std::vector<RationalVector>& exact) {
    std::vector<RealVector> out;
    out.reserve(exact.size());
    for (const auto& v : exact) out.push_back(to_real(v));
    return out;
}

Trajectory simulate_linear(const ArraySpec& spec, std::size_t k_max) {
    const auto& dyn = std::get<LinearDynamics>(spec.dynamics);
    const auto* lin = std::get_if<LinearInterconnection>(&spec.ic);
    if (lin == nullptr) {
        raise(errc::unsupported_interconnection,
              "exact linear stepping requires a linear interconnection (cube maps are irrational)");
    }
    const std::size_t n = dyn.a.rows();
    const std::size_t m = dyn.c.rows();
    const std::size_t q = spec.q;
    if (!dyn.a.is_square() || dyn.c.cols() != n || dyn.l.rows() != n || dyn.l.cols() != m) {
        raise(errc::dimension_mismatch, "linear dynamics matrices have inconsistent shapes");
    }
    if (lin->q != q || lin->m != m) {
        raise(errc::dimension_mismatch, "interconnection does not match agent count or output dimension");
    }
    if (spec.initial_exact.size() != q) {
        raise(errc::dimension_mismatch, "need one exact initial state per agent");
    }

    // Stacked closed loop: I_q x A + (I_q x L)(Gamma - I)(I_q x C).
    const RationalMatrix iq = RationalMatrix::identity(q);
    const RationalMatrix closed =
        kron(iq, dyn.a) + kron(iq, dyn.l) * (lin->gamma - RationalMatrix::identity(q * m)) * kron(iq, dyn.c);

    RationalVector stacked(q * n);
    for (std::size_t i = 0; i < q; ++i) {
        if (spec.initial_exact[i].size() != n) raise(errc::dimension_mismatch, "initial state has wrong dimension");
        for (std::size_t k = 0; k < n; ++k) stacked[i * n + k] = spec.initial_exact[i][k];
    }

    Trajectory traj;
    traj.q = q;
    traj.n = n;
    for (std::size_t step = 0; step <= k_max; ++step) {
        std::vector<RationalVector> snapshot(q);
        for (std::size_t i = 0; i < q; ++i) {
            snapshot[i] = RationalVector(stacked.begin() + static_cast<std::ptrdiff_t>(i * n),
                                         stacked.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
        }
        traj.steps.push_back(to_real_snapshot(snapshot));
        traj.exact_steps.push_back(std::move(snapshot));
        if (step < k_max) stacked = closed * stacked;
    }
    return traj;
}

Trajectory simulate_family(const ArraySpec& spec, std::size_t k_max) {
    const auto& dyn = std::get<FamilyDynamics>(spec.dynamics);
    const SystemFamily& fam = dyn.family;
    const std::size_t n = fam.state_dim;
    const std::size_t m = fam.output_dim;
    const std::size_t q = spec.q;
    if (agent_count(spec.ic) != q || output_dim(spec.ic) != m) {
        raise(errc::dimension_mismatch, "interconnection does not match agent count or output dimension");
    }
    if (spec.initial.size() != q) raise(errc::dimension_mismatch, "need one initial state per agent");
    for (const auto& x : spec.initial)
        if (x.size() != n) raise(errc::dimension_mismatch, "initial state has wrong dimension");

    Trajectory traj;
    traj.q = q;
    traj.n = n;
    std::vector<RealVector> states = spec.initial;
    traj.steps.push_back(states);
    for (std::size_t step = 0; step < k_max; ++step) {
        RealVector outputs(q * m);
        for (std::size_t i = 0; i < q; ++i) {
            const RealVector y = fam.h(states[i]);
            for (std::size_t k = 0; k < m; ++k) outputs[i * m + k] = y[k];
        }
        const RealVector driven = apply_interconnection(spec.ic, outputs);
        std::vector<RealVector> next(q);
        for (std::size_t i = 0; i < q; ++i) {
            const RealVector w(driven.begin() + static_cast<std::ptrdiff_t>(i * m),
                               driven.begin() + static_cast<std::ptrdiff_t>((i + 1) * m));
            next[i] = fam.observer_step(states[i], w);
            for (double v : next[i]) {
                if (!std::isfinite(v) || std::abs(v) > kDivergenceGuard) {
                    traj.diverged = true;
                    traj.diverged_at = step + 1;
                    return traj;
                }
            }
        }
        states = std::move(next);
        traj.steps.push_back(states);
    }
    return traj;
}

double snapshot_disagreement(const std::vector<RealVector>& states) {
    double worst = 0.0;
    for (std::size_t i = 0; i < states.size(); ++i)
        for (std::size_t j = i + 1; j < states.size(); ++j)
            worst = std::max(worst, inf_norm_diff(states[i], states[j]));
    return worst;
}

bool snapshot_equal_exact(const std::vector<RationalVector>& states) {
    for (std::size_t i = 1; i < states.size(); ++i)
        if (states[i] != states[0]) return false;
    return true;
}

}  // namespace

Trajectory simulate(const ArraySpec& spec, std::size_t k_max) {
    if (spec.q == 0) raise(errc::dimension_mismatch, "agent count must be positive");
    if (std::holds_alternative<LinearDynamics>(spec.dynamics)) return simulate_linear(spec, k_max);
    return simulate_family(spec, k_max);
}

SyncReport measure_sync(const Trajectory& traj, double tol, std::size_t bound_tau) {
    if (traj.diverged) raise(errc::diverged_trajectory, "trajectory diverged; synchronization is undefined");
    SyncReport report;
    report.tol = tol;
    report.bound_tau = bound_tau;
    report.per_step_disagreement.reserve(traj.steps.size());
    for (const auto& snapshot : traj.steps) report.per_step_disagreement.push_back(snapshot_disagreement(snapshot));

    const std::size_t count = traj.steps.size();
    const bool exact_mode = traj.exact() && tol == 0.0;
    // Scan backwards: tau is the first index of the closing run of
    // in-tolerance steps that reaches the end of the trajectory.
    std::size_t tau = count;
    for (std::size_t k = count; k-- > 0;) {
        const bool close =
            exact_mode ? snapshot_equal_exact(traj.exact_steps[k]) : report.per_step_disagreement[k] <= tol;
        if (!close) break;
        tau = k;
    }
    if (tau < count) report.measured_tau = tau;
    return report;
}

RationalMatrix build_phi(const RationalMatrix& a, const RationalMatrix& c, const RationalMatrix& h_gain,
                         const LinearInterconnection& ic, std::size_t q) {
    const std::size_t n = a.rows();
    const std::size_t m = c.rows();
    if (!a.is_square() || c.cols() != n || h_gain.rows() != n || h_gain.cols() != m) {
        raise(errc::dimension_mismatch, "gain matrices have inconsistent shapes");
    }
    if (ic.q != q || ic.m != m) raise(errc::dimension_mismatch, "interconnection shape does not match the array");
    const RationalMatrix iq = RationalMatrix::identity(q);
    return kron(iq, a) * (RationalMatrix::identity(q * n) +
                          kron(iq, h_gain) * (ic.gamma - RationalMatrix::identity(q * m)) * kron(iq, c));
}

LinearSyncBoundReport verify_linear_sync_bound(const RationalMatrix& a, const RationalMatrix& c, const RationalMatrix& l,
                               const CouplingMatrix& g, const RationalMatrix& qmat, std::size_t trials,
                               std::uint64_t seed) {
    const auto p = nilpotency_index(a - l * c);
    if (!p) raise(errc::nilpotency_precondition_failed, "A - LC is not nilpotent");
    const std::size_t n = a.rows();
    const std::size_t q = g.size();
    const std::size_t bound = g.horizon_r * *p;

    ArraySpec spec;
    spec.q = q;
    spec.dynamics = LinearDynamics{a, c, l};
    spec.ic = kron_interconnection(g, qmat);

    // Post-sync closed loop of the synchronized trajectory.
    const RationalMatrix law = a + l * qmat * c - l * c;

    LinearSyncBoundReport report;
    report.trials = trials;
    report.bound_tau = bound;
    report.horizon_ok = true;
    report.post_sync_law_ok = true;

    Rng rng(seed);
    const std::size_t k_max = bound + 5;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        spec.initial_exact.clear();
        for (std::size_t i = 0; i < q; ++i) spec.initial_exact.push_back(rng.next_unit_rational_vector(n));

        const Trajectory traj = simulate(spec, k_max);
        const SyncReport sync = measure_sync(traj, 0.0, bound);
        if (!sync.measured_tau || *sync.measured_tau > bound) {
            report.horizon_ok = false;
            continue;
        }
        report.worst_tau = std::max(report.worst_tau, *sync.measured_tau);

        RationalVector mean(n, Rational(0));
        for (std::size_t i = 0; i < q; ++i)
            for (std::size_t k = 0; k < n; ++k) mean[k] += g.left_eigvec[i] * spec.initial_exact[i][k];
        for (std::size_t k = bound; k <= k_max; ++k) {
            const RationalVector expected = matpow(law, k) * mean;
            for (std::size_t i = 0; i < q; ++i) {
                if (traj.exact_steps[k][i] != expected) {
                    report.post_sync_law_ok = false;
                    break;
                }
            }
        }
    }
    return report;
}

LinearSyncBoundReport verify_linear_sync_bound(const RationalMatrix& a, const RationalMatrix& c, const RationalMatrix& l,
                               const Interconnection& ic, std::size_t trials, std::uint64_t seed) {
    const auto* lin = std::get_if<LinearInterconnection>(&ic);
    if (lin == nullptr || !lin->kron_form) {
        raise(errc::unsupported_interconnection,
              "this check requires an interconnection with explicit coupling (x) output-factor structure");
    }
    return verify_linear_sync_bound(a, c, l, lin->kron_form->g, lin->kron_form->q_factor, trials, seed);
}

CubeSyncBoundReport verify_cube_sync_bound(const SystemFamily& family, const CouplingMatrix& g, std::size_t trials,
                               std::uint64_t seed, double tol) {
    if (family.name != "cube") {
        raise(errc::unsupported_family, "only the cube family carries the interconnection closure property");
    }
    const std::size_t q = g.size();
    const std::size_t bound = g.horizon_r * family.p;

    ArraySpec spec;
    spec.q = q;
    spec.dynamics = FamilyDynamics{family};
    spec.ic = cube_interconnection(g);

    CubeSyncBoundReport report;
    report.trials = trials;
    report.bound_tau = bound;
    report.tol = tol;
    report.horizon_ok = true;

    Rng rng(seed);
    for (std::size_t trial = 0; trial < trials; ++trial) {
        spec.initial.clear();
        for (std::size_t i = 0; i < q; ++i) spec.initial.push_back(rng.next_real_vector(family.state_dim, -1.0, 1.0));

        const Trajectory traj = simulate(spec, bound + 10);
        if (traj.diverged) {
            ++report.diverged;
            continue;
        }
        const SyncReport sync = measure_sync(traj, tol, bound);
        if (!sync.measured_tau || *sync.measured_tau > bound) {
            report.horizon_ok = false;
            continue;
        }
        if (!report.worst_tau || *sync.measured_tau > *report.worst_tau) report.worst_tau = sync.measured_tau;
    }
    return report;
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
    out << "step,agent";
    for (std::size_t k = 1; k <= traj.n; ++k) out << ",component_" << k;
    out << "\n";
    out.precision(17);
    for (std::size_t step = 0; step < traj.steps.size(); ++step) {
        for (std::size_t i = 0; i < traj.q; ++i) {
            out << step << "," << (i + 1);
            for (double v : traj.steps[step][i]) out << "," << v;
            out << "\n";
        }
    }
}

void write_sync_report(std::ostream& out, const SyncReport& report) {
    out << "measured_tau: ";
    if (report.measured_tau) {
        out << *report.measured_tau;
    } else {
        out << "none";
    }
    out << "\n";
    out << "bound_tau: ";
    if (report.bound_tau > 0) {
        out << report.bound_tau;
    } else {
        out << "n/a";
    }
    out << "\n";
    out << "tol: " << report.tol << "\n";
    out << "per_step_disagreement:\n";
    out.precision(17);
    for (std::size_t k = 0; k < report.per_step_disagreement.size(); ++k) {
        out << "  " << k << " " << report.per_step_disagreement[k] << "\n";
    }
}

}  // namespace deadbeat
