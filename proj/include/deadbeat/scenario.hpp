#pragma once

#include "deadbeat/array_sim.hpp"
#include "deadbeat/matrix.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace deadbeat {

/// Declarative scenario: dynamics + interconnection + initial conditions,
/// parsed from a JSON document. Matrices are arrays of rational strings so
/// exactness survives the config layer; plain numbers are also accepted.
struct LinearDynamicsSpec {
    RationalMatrix a;
    RationalMatrix c;
    RationalMatrix l;
    bool operator==(const LinearDynamicsSpec&) const = default;
};

struct FamilyDynamicsSpec {
    std::string family;
    std::vector<Rational> params;
    bool operator==(const FamilyDynamicsSpec&) const = default;
};

struct KronIcSpec {
    RationalMatrix g;
    RationalMatrix q_factor;
    bool operator==(const KronIcSpec&) const = default;
};

struct RawIcSpec {
    RationalMatrix gamma;
    std::size_t agents = 0;
    std::size_t outputs = 0;
    bool operator==(const RawIcSpec&) const = default;
};

struct CubeIcSpec {
    RationalMatrix g;
    bool operator==(const CubeIcSpec&) const = default;
};

struct TreeIcSpec {
    std::vector<std::optional<std::size_t>> parents;
    std::size_t outputs = 1;
    bool operator==(const TreeIcSpec&) const = default;
};

struct ScenarioConfig {
    std::string name;
    std::variant<LinearDynamicsSpec, FamilyDynamicsSpec> dynamics;
    std::variant<KronIcSpec, RawIcSpec, CubeIcSpec, TreeIcSpec> interconnection;
    std::vector<RationalVector> initial;
    std::optional<std::size_t> k_max;
    std::optional<double> tol;
    std::uint64_t seed = 0;
    std::string output;

    bool operator==(const ScenarioConfig&) const = default;
};

ScenarioConfig parse_scenario(const nlohmann::json& doc);
ScenarioConfig parse_scenario_text(const std::string& text);
nlohmann::json scenario_to_json(const ScenarioConfig& config);

/// Builds the runnable array (validating every part along the way).
ArraySpec to_array_spec(const ScenarioConfig& config);

struct ScenarioRun {
    Trajectory trajectory;
    SyncReport report;
    std::size_t k_max = 0;
    /// Nonzero only when a horizon guarantee applies to this scenario
    /// (linear + compatible, or cube family + cube coupling).
    std::size_t bound_tau = 0;
    std::string bound_note;  // "ok", "incompatible", or "unverified"
};

ScenarioRun run_scenario(const ScenarioConfig& config);

}  // namespace deadbeat
