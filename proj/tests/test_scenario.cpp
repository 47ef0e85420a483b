#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "deadbeat/errors.hpp"
#include "deadbeat/matrix_io.hpp"
#include "deadbeat/refcases.hpp"
#include "deadbeat/scenario.hpp"

using namespace deadbeat;

namespace {

std::string cube_scenario_json() {
    return R"({
        "name": "cube-array",
        "dynamics": {"kind": "family", "family": "cube", "params": []},
        "interconnection": {"kind": "cube", "g": [
            ["0.4", "-0.2", "3.2", "-2.4"],
            ["0.4", "-0.2", "0.2", "0.6"],
            ["0.2", "-0.6", "0.6", "0.8"],
            ["0.3", "-0.4", "0.9", "0.2"]]},
        "initial": [["0.5","0.5","0.5"], ["0","-1","0"], ["-0.5","0","-0.5"], ["-1","0.5","0"]],
        "k_max": 20,
        "tol": 1e-7,
        "seed": 3,
        "output": ""
    })";
}

}  // namespace

TEST_CASE("scenario parse and structural round trip") {
    const ScenarioConfig config = parse_scenario_text(cube_scenario_json());
    CHECK(config.name == "cube-array");
    CHECK(config.k_max == 20);
    CHECK(config.tol == 1e-7);
    CHECK(config.seed == 3);

    const ScenarioConfig again = parse_scenario(scenario_to_json(config));
    CHECK(again == config);
    // and once more through text to pin the serialization itself
    CHECK(parse_scenario(scenario_to_json(again)) == config);
}

TEST_CASE("linear scenario with h instead of l") {
    const std::string json = R"({
        "name": "pair",
        "dynamics": {"kind": "linear",
            "a": [["0","-1","1","0"],["-1","0","0","-1"],["1","0","0","0"],["-1","-1","-1","1"]],
            "c": [["0","-1","1","-1"],["-1","1","0","1"]],
            "h": [["-1","-5/4"],["1","3/2"],["0","-1/4"],["-2","-7/4"]]},
        "interconnection": {"kind": "raw",
            "gamma": [["0","0","1","0"],["0","1","0","0"],["0","0","1","0"],["1","1","-1","0"]],
            "agents": 2, "outputs": 2},
        "initial": [["1","0","0","0"], ["0","1","0","0"]],
        "k_max": 50
    })";
    const ScenarioConfig config = parse_scenario_text(json);
    const auto& lin = std::get<LinearDynamicsSpec>(config.dynamics);
    CHECK(lin.l == refcases::pair4_a() * refcases::pair4_h());

    const ScenarioRun run = run_scenario(config);
    CHECK(run.bound_tau == 0);
    CHECK(run.bound_note == "incompatible");
    CHECK(!run.report.measured_tau.has_value());
    CHECK(run.k_max == 50);

    // round trip survives the h -> l normalization
    CHECK(parse_scenario(scenario_to_json(config)) == config);
}

TEST_CASE("run_scenario on the cube array reports the r*p bound") {
    const ScenarioRun run = run_scenario(parse_scenario_text(cube_scenario_json()));
    CHECK(run.bound_tau == 9);
    CHECK(run.bound_note == "ok");
    REQUIRE(run.report.measured_tau.has_value());
    CHECK(*run.report.measured_tau <= 9);
}

TEST_CASE("defaults: k_max = r*p + 10 and exact tolerance for linear dynamics") {
    const std::string json = R"({
        "name": "consensus",
        "dynamics": {"kind": "linear", "a": [["1"]], "c": [["1"]], "l": [["1"]]},
        "interconnection": {"kind": "kron",
            "g": [["0.4","-0.2","3.2","-2.4"],["0.4","-0.2","0.2","0.6"],
                  ["0.2","-0.6","0.6","0.8"],["0.3","-0.4","0.9","0.2"]],
            "q_factor": [["1"]]},
        "initial": [["1"], ["-1/2"], ["3/4"], ["2/5"]]
    })";
    const ScenarioRun run = run_scenario(parse_scenario_text(json));
    // p = 1 for A - LC = 0, r = 3
    CHECK(run.bound_tau == 3);
    CHECK(run.bound_note == "ok");
    CHECK(run.k_max == 13);
    CHECK(run.report.tol == 0.0);
    REQUIRE(run.report.measured_tau.has_value());
    CHECK(*run.report.measured_tau <= 3);
}

TEST_CASE("tree scenario parses null parents") {
    const std::string json = R"({
        "name": "chain",
        "dynamics": {"kind": "family", "family": "cube", "params": []},
        "interconnection": {"kind": "tree", "parents": [1, 2, null], "outputs": 1},
        "initial": [[0.1, 0.2, 0.3], [0.4, 0.5, 0.6], [-0.2, 0.1, 0.0]],
        "k_max": 12
    })";
    const ScenarioConfig config = parse_scenario_text(json);
    const auto& tree = std::get<TreeIcSpec>(config.interconnection);
    REQUIRE(tree.parents.size() == 3);
    CHECK(tree.parents[0] == 1);
    CHECK(!tree.parents[2].has_value());

    const ScenarioRun run = run_scenario(config);
    REQUIRE(run.report.measured_tau.has_value());
    CHECK(parse_scenario(scenario_to_json(config)) == config);
}

TEST_CASE("scenario validation errors carry field context") {
    CHECK_THROWS_AS(parse_scenario_text("not json"), Error);
    CHECK_THROWS_AS(parse_scenario_text(R"({"name":"x"})"), Error);
    CHECK_THROWS_AS(parse_scenario_text(R"({
        "dynamics": {"kind": "linear", "a": [["1"]], "c": [["1"]]},
        "interconnection": {"kind": "cube", "g": [["1"]]},
        "initial": [["1"]]
    })"),
                    Error);  // neither l nor h

    try {
        parse_scenario_text(R"({
            "dynamics": {"kind": "warp"},
            "interconnection": {"kind": "cube", "g": [["1"]]},
            "initial": []
        })");
        FAIL("expected parse_error");
    } catch (const Error& err) {
        CHECK(err.code() == errc::parse_error);
    }
}
