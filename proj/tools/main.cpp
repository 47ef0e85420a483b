// Command-line front end: coupling validation, observer design, array
// simulation from JSON scenarios, bundled reference reproductions, and
// random coupling generation.
//
// Exit codes: 0 success/pass, 1 usage or parse error, 2 domain validation
// failure, 3 reproduction mismatch.

#include "deadbeat/array_sim.hpp"
#include "deadbeat/coupling.hpp"
#include "deadbeat/errors.hpp"
#include "deadbeat/families.hpp"
#include "deadbeat/interconnect.hpp"
#include "deadbeat/matrix_io.hpp"
#include "deadbeat/observer.hpp"
#include "deadbeat/polynomial.hpp"
#include "deadbeat/refcases.hpp"
#include "deadbeat/scenario.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace deadbeat;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitMismatch = 3;

int exit_code_for(const Error& err) {
    switch (err.code()) {
        case errc::parse_error:
        case errc::unknown_target:
            return kExitUsage;
        default:
            return kExitDomain;
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(errc::parse_error, "cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) raise(errc::parse_error, "cannot write file: " + path);
    out << content;
}

// ---------------------------------------------------------------------------

int cmd_validate_coupling(const std::string& matrix_path) {
    const RationalMatrix g = read_matrix_file(matrix_path);
    try {
        const CouplingMatrix coupling = validate_coupling(g);
        std::cout << "valid, r=" << coupling.horizon_r << ", l=" << format_vector(coupling.left_eigvec) << "\n";
        return kExitOk;
    } catch (const Error& err) {
        if (err.code() == errc::row_sum_violation || err.code() == errc::spectrum_violation ||
            err.code() == errc::dimension_mismatch) {
            std::cout << "invalid: " << errc_name(err.code()) << "\n";
            std::cerr << err.what() << "\n";
            return kExitDomain;
        }
        throw;
    }
}

int cmd_design_observer(const std::string& a_path, const std::string& c_path, const std::string& out_path) {
    const RationalMatrix a = read_matrix_file(a_path);
    const RationalMatrix c = read_matrix_file(c_path);
    try {
        const LinearDeadbeatObserver obs = design_observer(a, c);
        std::cout << "p=" << obs.p << "\n";
        std::cout << "H:\n" << format_matrix(obs.h_gain);
        std::cout << "L:\n" << format_matrix(obs.l_gain);
        if (!out_path.empty()) {
            std::ofstream out(out_path);
            if (!out) raise(errc::parse_error, "cannot write file: " + out_path);
            write_observer(out, obs);
            std::cout << "bundle written to " << out_path << "\n";
        }
        return kExitOk;
    } catch (const Error& err) {
        if (err.code() == errc::not_deadbeat_observable) {
            std::cout << "not deadbeat observable\n";
            return kExitDomain;
        }
        throw;
    }
}

int cmd_simulate(const std::string& config_path, const std::optional<std::size_t>& kmax_flag,
                 const std::optional<double>& tol_flag, const std::optional<std::uint64_t>& seed_flag,
                 const std::string& out_flag) {
    ScenarioConfig config = parse_scenario_text(read_file(config_path));
    if (kmax_flag) config.k_max = *kmax_flag;
    if (tol_flag) config.tol = *tol_flag;
    if (seed_flag) config.seed = *seed_flag;
    if (!out_flag.empty()) config.output = out_flag;

    const ScenarioRun run = run_scenario(config);

    if (!config.output.empty()) {
        std::ofstream out(config.output);
        if (!out) raise(errc::parse_error, "cannot write file: " + config.output);
        write_trajectory_csv(out, run.trajectory);
    }

    if (run.trajectory.diverged) {
        std::cout << "diverged at step " << run.trajectory.diverged_at << " (k_max=" << run.k_max << ")\n";
        return kExitDomain;
    }

    std::ostringstream line;
    line << "measured_tau=";
    if (run.report.measured_tau) {
        line << *run.report.measured_tau;
    } else {
        line << "none (k_max=" << run.k_max << ")";
    }
    line << ", bound=";
    if (run.bound_tau > 0) {
        line << run.bound_tau;
        const bool pass = run.report.measured_tau && *run.report.measured_tau <= run.bound_tau;
        line << ", " << (pass ? "PASS" : "FAIL");
    } else {
        line << "N/A (" << run.bound_note << ")";
    }
    std::cout << line.str() << "\n";
    write_sync_report(std::cout, run.report);
    return kExitOk;
}

int cmd_random_coupling(std::size_t agents, std::size_t horizon_r, std::uint64_t seed, const std::string& out_path) {
    const CouplingMatrix coupling = random_coupling(agents, horizon_r, seed);
    const std::string text = format_matrix(coupling.g);
    if (!out_path.empty()) {
        write_file(out_path, text);
    }
    std::cout << text;
    std::cout << "r=" << coupling.horizon_r << ", l=" << format_vector(coupling.left_eigvec) << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// Reproduction targets. Each one recomputes the artifact and compares it
// against the embedded expected values; nothing is printed unchecked.

bool reproduce_dbcoup_power() {
    const CouplingMatrix coupling = validate_coupling(refcases::coupling4());
    const RationalVector weights = refcases::coupling4_weights();
    bool ok = coupling.horizon_r == 3 && coupling.left_eigvec == weights;
    const RationalMatrix expected =
        RationalMatrix::ones(4, 1) * RationalMatrix::column(weights).transpose();
    ok = ok && matpow(coupling.g, 3) == expected;
    std::cout << "coupling power: r=" << coupling.horizon_r << ", l=" << format_vector(coupling.left_eigvec)
              << (ok ? " [ok]" : " [mismatch]") << "\n";
    return ok;
}

bool reproduce_consensus_value() {
    const CouplingMatrix coupling = validate_coupling(refcases::coupling4());
    const RationalVector weights = refcases::coupling4_weights();

    ArraySpec spec;
    spec.q = 4;
    spec.dynamics = LinearDynamics{RationalMatrix::identity(1), RationalMatrix::identity(1),
                                   RationalMatrix::identity(1)};
    spec.ic = kron_interconnection(coupling, RationalMatrix::identity(1));
    spec.initial_exact = {{rat(1)}, {rat(-1, 2)}, {rat(3, 4)}, {rat(2, 5)}};

    const Trajectory traj = simulate(spec, 8);
    Rational expected(0);
    for (std::size_t i = 0; i < 4; ++i) expected += weights[i] * spec.initial_exact[i][0];

    bool ok = true;
    for (std::size_t k = 3; k <= 8; ++k)
        for (std::size_t i = 0; i < 4; ++i) ok = ok && traj.exact_steps[k][i][0] == expected;
    std::cout << "consensus value: " << format_rational(expected) << (ok ? " [ok]" : " [mismatch]") << "\n";
    return ok;
}

bool reproduce_counterexample_h() {
    const LinearDeadbeatObserver obs = design_observer(refcases::pair4_a(), refcases::pair4_c());
    const bool ok = obs.p == 2 && obs.h_gain == refcases::pair4_h() &&
                    nilpotency_index(obs.a - obs.a * obs.h_gain * obs.c) == 2;
    std::cout << "observer gain: p=" << obs.p << "\nH:\n" << format_matrix(obs.h_gain);
    std::cout << (ok ? "[ok]" : "[mismatch]") << "\n";
    return ok;
}

bool reproduce_counterexample_phi() {
    const LinearDeadbeatObserver obs = design_observer(refcases::pair4_a(), refcases::pair4_c());
    const auto ic = raw_linear_interconnection(refcases::gamma_nonkron(), 2, 2);
    const RationalMatrix phi =
        build_phi(obs.a, obs.c, obs.h_gain, std::get<LinearInterconnection>(ic), 2);
    const Polynomial poly = charpoly(phi);
    const bool match = poly == refcases::pair4_phi_charpoly();
    const bool origin_deficit = !poly.divisible_by_power(4);  // fewer than (q-1)n roots at 0
    std::cout << "closed-loop charpoly: " << poly.str() << "\n";
    std::cout << (match && origin_deficit ? "[ok]" : "[mismatch]") << "\n";
    return match && origin_deficit;
}

bool reproduce_fig_observer(const std::string& out_dir) {
    const SystemFamily fam = chaotic_family();
    RealVector x = refcases::chaotic_x0();
    RealVector xh = refcases::chaotic_xhat0();

    std::ostringstream csv;
    csv << "step,x_1,x_2,x_3,xhat_1,xhat_2,xhat_3,err_inf,locked\n";
    csv.precision(17);
    bool ok = true;
    for (std::size_t k = 0; k <= 12; ++k) {
        const double err = inf_norm_diff(x, xh);
        const bool locked = err <= 1e-9;
        if (k >= fam.p && !locked) ok = false;
        csv << k << "," << x[0] << "," << x[1] << "," << x[2] << "," << xh[0] << "," << xh[1] << "," << xh[2] << ","
            << err << "," << (locked ? 1 : 0) << "\n";
        const RealVector y = fam.h(x);
        const RealVector xn = fam.f(x);
        xh = fam.observer_step(xh, y);
        x = xn;
    }
    const std::string path = (std::filesystem::path(out_dir) / "observer_tracking.csv").string();
    write_file(path, csv.str());
    std::cout << "observer tracking csv: " << path << (ok ? " [ok]" : " [mismatch]") << "\n";
    return ok;
}

bool reproduce_fig_sync(const std::string& out_dir) {
    ArraySpec spec;
    spec.q = 4;
    spec.dynamics = FamilyDynamics{cube_family()};
    spec.ic = cube_interconnection(validate_coupling(refcases::coupling4()));
    spec.initial = refcases::cube_array_initials();

    const Trajectory traj = simulate(spec, 20);
    const SyncReport report = measure_sync(traj, 1e-7, 9);
    const bool ok = !traj.diverged && report.measured_tau && *report.measured_tau <= 9;

    std::ostringstream csv;
    csv << "step,agent,component_1,component_2,component_3,synced\n";
    csv.precision(17);
    for (std::size_t k = 0; k < traj.steps.size(); ++k) {
        const bool synced = report.per_step_disagreement[k] <= 1e-7;
        for (std::size_t i = 0; i < 4; ++i) {
            csv << k << "," << (i + 1);
            for (double v : traj.steps[k][i]) csv << "," << v;
            csv << "," << (synced ? 1 : 0) << "\n";
        }
    }
    const std::string path = (std::filesystem::path(out_dir) / "array_sync.csv").string();
    write_file(path, csv.str());
    std::cout << "array sync csv: " << path;
    if (report.measured_tau) {
        std::cout << " measured_tau=" << *report.measured_tau;
    }
    std::cout << (ok ? " [ok]" : " [mismatch]") << "\n";
    return ok;
}

int cmd_reproduce(const std::string& target, const std::string& out_dir) {
    bool ok = false;
    if (target == "dbcoup-power") {
        ok = reproduce_dbcoup_power();
    } else if (target == "consensus-value") {
        ok = reproduce_consensus_value();
    } else if (target == "counterexample-H") {
        ok = reproduce_counterexample_h();
    } else if (target == "counterexample-phi") {
        ok = reproduce_counterexample_phi();
    } else if (target == "fig-observer") {
        ok = reproduce_fig_observer(out_dir);
    } else if (target == "fig-sync") {
        ok = reproduce_fig_sync(out_dir);
    } else {
        raise(errc::unknown_target,
              "unknown target '" + target +
                  "' (expected dbcoup-power, consensus-value, counterexample-H, counterexample-phi, "
                  "fig-observer, or fig-sync)");
    }
    return ok ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Deadbeat observer arrays: finite-step synchronization toolbox"};
    app.require_subcommand(1);

    std::string matrix_path;
    auto* validate = app.add_subcommand("validate-coupling", "Check a coupling matrix and report its horizon");
    validate->add_option("matrix", matrix_path, "matrix file (one row per line, rational entries)")->required();

    std::string a_path, c_path, observer_out;
    auto* design = app.add_subcommand("design-observer", "Design a deadbeat observer for a linear pair (A, C)");
    design->add_option("a", a_path, "state matrix file")->required();
    design->add_option("c", c_path, "output matrix file")->required();
    design->add_option("--out", observer_out, "write the observer bundle here");

    std::string config_path, sim_out;
    std::optional<std::size_t> kmax_flag;
    std::optional<double> tol_flag;
    std::optional<std::uint64_t> seed_flag;
    auto* sim = app.add_subcommand("simulate", "Run a coupled-array scenario from a JSON config");
    sim->add_option("config", config_path, "scenario config (JSON)")->required();
    sim->add_option("--kmax", kmax_flag, "override step count");
    sim->add_option("--tol", tol_flag, "override synchronization tolerance");
    sim->add_option("--seed", seed_flag, "override scenario seed");
    sim->add_option("--out", sim_out, "override trajectory CSV path");

    std::string target, repro_out = ".";
    auto* repro = app.add_subcommand("reproduce", "Recompute a bundled reference result and self-check it");
    repro->add_option("target", target, "one of: dbcoup-power, consensus-value, counterexample-H, "
                                        "counterexample-phi, fig-observer, fig-sync")
        ->required();
    repro->add_option("--out", repro_out, "output directory for generated CSV files");

    std::size_t rc_agents = 0, rc_horizon = 0;
    std::uint64_t rc_seed = 0;
    std::string rc_out;
    auto* randc = app.add_subcommand("random-coupling", "Generate a coupling matrix with a prescribed horizon");
    randc->add_option("--agents", rc_agents, "matrix size q")->required();
    randc->add_option("--horizon", rc_horizon, "target horizon r")->required();
    randc->add_option("--seed", rc_seed, "generator seed");
    randc->add_option("--out", rc_out, "write the matrix here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (validate->parsed()) return cmd_validate_coupling(matrix_path);
        if (design->parsed()) return cmd_design_observer(a_path, c_path, observer_out);
        if (sim->parsed()) return cmd_simulate(config_path, kmax_flag, tol_flag, seed_flag, sim_out);
        if (repro->parsed()) return cmd_reproduce(target, repro_out);
        if (randc->parsed()) return cmd_random_coupling(rc_agents, rc_horizon, rc_seed, rc_out);
    } catch (const Error& err) {
        std::cerr << "error (" << errc_name(err.code()) << "): " << err.what() << "\n";
        return exit_code_for(err);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
