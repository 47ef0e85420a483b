#pragma once

#include "deadbeat/matrix.hpp"

#include <cstdint>

namespace deadbeat {

/// A q x q coupling matrix whose iterates reach consensus in finitely many
/// steps: rows sum to one and the characteristic polynomial is
/// s^(q-1)(s-1). horizon_r is the smallest r >= 1 with G^r = G^(r+1), at
/// which point every row of G^r equals the consensus weights l^T.
struct CouplingMatrix {
    RationalMatrix g;
    std::size_t horizon_r = 0;
    RationalVector left_eigvec;

    std::size_t size() const noexcept { return g.rows(); }
};

/// Checks the two structural conditions and computes the horizon and
/// consensus weights. Throws Error(row_sum_violation) or
/// Error(spectrum_violation) when the input is not a deadbeat coupling
/// matrix.
CouplingMatrix validate_coupling(const RationalMatrix& g);

/// Smallest r >= 1 with g^r = g^(r+1). Validates g first.
std::size_t deadbeat_horizon(const RationalMatrix& g);

/// Generates a coupling matrix with horizon exactly r by conjugating
/// diag(1, J) with a random unimodular-ish V = [1 | R]; the all-ones first
/// column makes the rows sum to one automatically. Deterministic per seed.
/// Throws Error(invalid_horizon) when r is not attainable for q agents.
CouplingMatrix random_coupling(std::size_t q, std::size_t r, std::uint64_t seed);

}  // namespace deadbeat
