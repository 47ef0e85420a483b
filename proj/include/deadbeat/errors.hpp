#pragma once

#include <stdexcept>
#include <string>

namespace deadbeat {

enum class errc {
    dimension_mismatch,
    parse_error,
    row_sum_violation,
    spectrum_violation,
    invalid_horizon,
    singular_a,
    rank_deficient_c,
    not_deadbeat_observable,
    nilpotency_check_failed,
    diagonal_not_invariant,
    not_deadbeat,
    cycle_detected,
    multiple_roots,
    zero_b,
    diverged_trajectory,
    nilpotency_precondition_failed,
    unsupported_interconnection,
    unsupported_family,
    unknown_target,
};

const char* errc_name(errc code) noexcept;

/// Domain error carrying a machine-checkable code plus a human-readable message.
class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace deadbeat
