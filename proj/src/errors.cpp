#include "deadbeat/errors.hpp"

namespace deadbeat {

const char* errc_name(errc code) noexcept {
    switch (code) {
        case errc::dimension_mismatch: return "dimension-mismatch";
        case errc::parse_error: return "parse-error";
        case errc::row_sum_violation: return "row-sum";
        case errc::spectrum_violation: return "spectrum";
        case errc::invalid_horizon: return "invalid-horizon";
        case errc::singular_a: return "singular-a";
        case errc::rank_deficient_c: return "rank-deficient-c";
        case errc::not_deadbeat_observable: return "not-deadbeat-observable";
        case errc::nilpotency_check_failed: return "nilpotency-check-failed";
        case errc::diagonal_not_invariant: return "diagonal-not-invariant";
        case errc::not_deadbeat: return "not-deadbeat";
        case errc::cycle_detected: return "cycle-detected";
        case errc::multiple_roots: return "multiple-roots";
        case errc::zero_b: return "zero-b";
        case errc::diverged_trajectory: return "diverged-trajectory";
        case errc::nilpotency_precondition_failed: return "nilpotency-precondition-failed";
        case errc::unsupported_interconnection: return "unsupported-interconnection";
        case errc::unsupported_family: return "unsupported-family";
        case errc::unknown_target: return "unknown-target";
    }
    return "unknown";
}

}  // namespace deadbeat
