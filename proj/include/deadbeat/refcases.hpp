#pragma once

#include "deadbeat/matrix.hpp"
#include "deadbeat/polynomial.hpp"

#include <vector>

namespace deadbeat::refcases {

/// 4x4 coupling matrix with horizon 3; its third power is rank one with
/// every row equal to the consensus weights below.
RationalMatrix coupling4();
RationalVector coupling4_weights();

/// Fourth-order pair with two outputs: nonsingular state matrix, full-rank
/// output map, deadbeat observable with horizon 2.
RationalMatrix pair4_a();
RationalMatrix pair4_c();

/// The gain the geometric design reproduces for pair4.
RationalMatrix pair4_h();

/// 2-agent, 2-output linear deadbeat map (horizon 2) that admits no
/// coupling (x) output-factor decomposition.
RationalMatrix gamma_nonkron();

/// Closed-loop characteristic polynomial of the pair4 array coupled through
/// gamma_nonkron; fewer than (q-1)n roots at the origin, so the array cannot
/// synchronize in finitely many steps.
Polynomial pair4_phi_charpoly();

/// Initial conditions for the bundled demonstration runs.
RealVector chaotic_x0();
RealVector chaotic_xhat0();
std::vector<RealVector> cube_array_initials();

}  // namespace deadbeat::refcases
