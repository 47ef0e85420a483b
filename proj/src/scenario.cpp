#include "deadbeat/scenario.hpp"

#include "deadbeat/errors.hpp"
#include "deadbeat/families.hpp"
#include "deadbeat/observer.hpp"

#include <sstream>
#include <utility>

namespace deadbeat {

namespace {

using nlohmann::json;

Rational entry_to_rational(const json& value, const char* where) {
    if (value.is_string()) return parse_rational(value.get<std::string>());
    if (value.is_number_integer()) return Rational(static_cast<long>(value.get<std::int64_t>()));
    if (value.is_number_float()) return Rational(value.get<double>());  // exact binary expansion
    raise(errc::parse_error, std::string(where) + ": matrix entries must be strings or numbers");
}

RationalMatrix json_to_matrix(const json& value, const char* where) {
    if (!value.is_array() || value.empty()) {
        raise(errc::parse_error, std::string(where) + ": expected a non-empty array of rows");
    }
    std::vector<RationalVector> rows;
    for (const auto& row : value) {
        if (!row.is_array() || row.empty()) raise(errc::parse_error, std::string(where) + ": rows must be arrays");
        RationalVector r;
        for (const auto& entry : row) r.push_back(entry_to_rational(entry, where));
        if (!rows.empty() && r.size() != rows.front().size()) {
            raise(errc::parse_error, std::string(where) + ": ragged rows");
        }
        rows.push_back(std::move(r));
    }
    RationalMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

json matrix_to_json(const RationalMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(format_rational(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

const json& require_field(const json& doc, const char* key, const char* where) {
    auto it = doc.find(key);
    if (it == doc.end()) raise(errc::parse_error, std::string(where) + ": missing field '" + key + "'");
    return *it;
}

}  // namespace

ScenarioConfig parse_scenario(const json& doc) {
    if (!doc.is_object()) raise(errc::parse_error, "scenario: expected a JSON object");
    ScenarioConfig config;
    config.name = doc.value("name", std::string());

    const json& dyn = require_field(doc, "dynamics", "scenario");
    const std::string dyn_kind = require_field(dyn, "kind", "dynamics").get<std::string>();
    if (dyn_kind == "linear") {
        LinearDynamicsSpec spec;
        spec.a = json_to_matrix(require_field(dyn, "a", "dynamics"), "dynamics.a");
        spec.c = json_to_matrix(require_field(dyn, "c", "dynamics"), "dynamics.c");
        if (dyn.contains("l") == dyn.contains("h")) {
            raise(errc::parse_error, "dynamics: provide exactly one of 'l' or 'h'");
        }
        if (dyn.contains("l")) {
            spec.l = json_to_matrix(dyn["l"], "dynamics.l");
        } else {
            spec.l = spec.a * json_to_matrix(dyn["h"], "dynamics.h");
        }
        config.dynamics = std::move(spec);
    } else if (dyn_kind == "family") {
        FamilyDynamicsSpec spec;
        spec.family = require_field(dyn, "family", "dynamics").get<std::string>();
        if (dyn.contains("params")) {
            for (const auto& p : dyn["params"]) spec.params.push_back(entry_to_rational(p, "dynamics.params"));
        }
        config.dynamics = std::move(spec);
    } else {
        raise(errc::parse_error, "dynamics.kind must be 'linear' or 'family'");
    }

    const json& ic = require_field(doc, "interconnection", "scenario");
    const std::string ic_kind = require_field(ic, "kind", "interconnection").get<std::string>();
    if (ic_kind == "kron") {
        config.interconnection = KronIcSpec{json_to_matrix(require_field(ic, "g", "interconnection"), "ic.g"),
                                            json_to_matrix(require_field(ic, "q_factor", "interconnection"), "ic.q_factor")};
    } else if (ic_kind == "raw") {
        config.interconnection =
            RawIcSpec{json_to_matrix(require_field(ic, "gamma", "interconnection"), "ic.gamma"),
                      require_field(ic, "agents", "interconnection").get<std::size_t>(),
                      require_field(ic, "outputs", "interconnection").get<std::size_t>()};
    } else if (ic_kind == "cube") {
        config.interconnection = CubeIcSpec{json_to_matrix(require_field(ic, "g", "interconnection"), "ic.g")};
    } else if (ic_kind == "tree") {
        TreeIcSpec spec;
        for (const auto& p : require_field(ic, "parents", "interconnection")) {
            if (p.is_null()) {
                spec.parents.push_back(std::nullopt);
            } else {
                spec.parents.push_back(p.get<std::size_t>());
            }
        }
        spec.outputs = ic.value("outputs", std::size_t{1});
        config.interconnection = std::move(spec);
    } else {
        raise(errc::parse_error, "interconnection.kind must be one of kron/raw/cube/tree");
    }

    for (const auto& state : require_field(doc, "initial", "scenario")) {
        if (!state.is_array()) raise(errc::parse_error, "initial: expected arrays of components");
        RationalVector v;
        for (const auto& entry : state) v.push_back(entry_to_rational(entry, "initial"));
        config.initial.push_back(std::move(v));
    }

    if (doc.contains("k_max")) config.k_max = doc["k_max"].get<std::size_t>();
    if (doc.contains("tol")) config.tol = doc["tol"].get<double>();
    config.seed = doc.value("seed", std::uint64_t{0});
    config.output = doc.value("output", std::string());
    return config;
}

ScenarioConfig parse_scenario_text(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) raise(errc::parse_error, "scenario: invalid JSON");
    return parse_scenario(doc);
}

nlohmann::json scenario_to_json(const ScenarioConfig& config) {
    json doc;
    doc["name"] = config.name;

    if (const auto* lin = std::get_if<LinearDynamicsSpec>(&config.dynamics)) {
        doc["dynamics"] = {{"kind", "linear"},
                           {"a", matrix_to_json(lin->a)},
                           {"c", matrix_to_json(lin->c)},
                           {"l", matrix_to_json(lin->l)}};
    } else {
        const auto& fam = std::get<FamilyDynamicsSpec>(config.dynamics);
        json params = json::array();
        for (const auto& p : fam.params) params.push_back(format_rational(p));
        doc["dynamics"] = {{"kind", "family"}, {"family", fam.family}, {"params", std::move(params)}};
    }

    if (const auto* kron_spec = std::get_if<KronIcSpec>(&config.interconnection)) {
        doc["interconnection"] = {{"kind", "kron"},
                                  {"g", matrix_to_json(kron_spec->g)},
                                  {"q_factor", matrix_to_json(kron_spec->q_factor)}};
    } else if (const auto* raw = std::get_if<RawIcSpec>(&config.interconnection)) {
        doc["interconnection"] = {{"kind", "raw"},
                                  {"gamma", matrix_to_json(raw->gamma)},
                                  {"agents", raw->agents},
                                  {"outputs", raw->outputs}};
    } else if (const auto* cube = std::get_if<CubeIcSpec>(&config.interconnection)) {
        doc["interconnection"] = {{"kind", "cube"}, {"g", matrix_to_json(cube->g)}};
    } else {
        const auto& tree = std::get<TreeIcSpec>(config.interconnection);
        json parents = json::array();
        for (const auto& p : tree.parents) {
            if (p) {
                parents.push_back(*p);
            } else {
                parents.push_back(nullptr);
            }
        }
        doc["interconnection"] = {{"kind", "tree"}, {"parents", std::move(parents)}, {"outputs", tree.outputs}};
    }

    json initial = json::array();
    for (const auto& state : config.initial) {
        json row = json::array();
        for (const auto& entry : state) row.push_back(format_rational(entry));
        initial.push_back(std::move(row));
    }
    doc["initial"] = std::move(initial);

    if (config.k_max) doc["k_max"] = *config.k_max;
    if (config.tol) doc["tol"] = *config.tol;
    doc["seed"] = config.seed;
    doc["output"] = config.output;
    return doc;
}

ArraySpec to_array_spec(const ScenarioConfig& config) {
    ArraySpec spec;

    if (const auto* kron_spec = std::get_if<KronIcSpec>(&config.interconnection)) {
        spec.ic = kron_interconnection(validate_coupling(kron_spec->g), kron_spec->q_factor);
    } else if (const auto* raw = std::get_if<RawIcSpec>(&config.interconnection)) {
        spec.ic = raw_linear_interconnection(raw->gamma, raw->agents, raw->outputs);
    } else if (const auto* cube = std::get_if<CubeIcSpec>(&config.interconnection)) {
        spec.ic = cube_interconnection(validate_coupling(cube->g));
    } else {
        const auto& tree = std::get<TreeIcSpec>(config.interconnection);
        spec.ic = tree_interconnection(tree.parents, tree.outputs);
    }
    spec.q = agent_count(spec.ic);

    if (const auto* lin = std::get_if<LinearDynamicsSpec>(&config.dynamics)) {
        spec.dynamics = LinearDynamics{lin->a, lin->c, lin->l};
        spec.initial_exact = config.initial;
    } else {
        const auto& famspec = std::get<FamilyDynamicsSpec>(config.dynamics);
        std::vector<double> params;
        for (const auto& p : famspec.params) params.push_back(to_double(p));
        spec.dynamics = FamilyDynamics{family_by_name(famspec.family, params)};
        for (const auto& state : config.initial) spec.initial.push_back(to_real(state));
    }
    return spec;
}

ScenarioRun run_scenario(const ScenarioConfig& config) {
    ArraySpec spec = to_array_spec(config);
    const std::size_t r = horizon(spec.ic);

    ScenarioRun run;
    run.bound_note = "unverified";
    std::optional<std::size_t> p;
    if (const auto* lin = std::get_if<LinearDynamics>(&spec.dynamics)) {
        p = nilpotency_index(lin->a - lin->l * lin->c);
        if (p) {
            const auto& linear_ic = std::get<LinearInterconnection>(spec.ic);
            if (check_linear_compatibility(lin->a, lin->c, linear_ic, *p)) {
                run.bound_tau = r * *p;
                run.bound_note = "ok";
            } else {
                run.bound_note = "incompatible";
            }
        } else {
            run.bound_note = "incompatible";
        }
    } else {
        const auto& fam = std::get<FamilyDynamics>(spec.dynamics);
        p = fam.family.p;
        if (fam.family.name == "cube" && std::holds_alternative<CubeInterconnection>(spec.ic)) {
            run.bound_tau = r * *p;
            run.bound_note = "ok";
        }
    }

    const std::size_t default_k = p ? r * *p + 10 : 50;
    run.k_max = config.k_max.value_or(default_k);

    const bool exact_mode = std::holds_alternative<LinearDynamics>(spec.dynamics);
    const double tol = config.tol.value_or(exact_mode ? 0.0 : 1e-7);

    run.trajectory = simulate(spec, run.k_max);
    if (!run.trajectory.diverged) {
        run.report = measure_sync(run.trajectory, tol, run.bound_tau);
    }
    return run;
}

}  // namespace deadbeat
