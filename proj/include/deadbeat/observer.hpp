#pragma once

#include "deadbeat/matrix.hpp"

#include <iosfwd>
#include <vector>

namespace deadbeat {

/// Descending chain of unobservable subspaces for a linear pair (A, C):
/// S_0 = N(C), S_{k+1} = A*S_k intersected with N(C). s[k] holds a full
/// column rank basis of S_k; the chain stops once it stabilizes or reaches
/// the trivial subspace.
struct SubspaceChain {
    std::vector<RationalMatrix> s;
};

/// Deadbeat state estimator for x+ = Ax, y = Cx with update
/// xhat+ = A(xhat + H(y - C*xhat)). The horizon p is minimal:
/// (A - LC)^p = 0 and (A - LC)^(p-1) != 0, exactly, with L = A*H.
struct LinearDeadbeatObserver {
    RationalMatrix a;
    RationalMatrix c;
    RationalMatrix h_gain;
    RationalMatrix l_gain;
    std::size_t p = 0;
    SubspaceChain chain;
};

/// Requires A square nonsingular and C full row rank; throws
/// Error(singular_a) / Error(rank_deficient_c) otherwise.
SubspaceChain subspace_chain(const RationalMatrix& a, const RationalMatrix& c);

/// Walks the chain to the first k where A*S_k complements N(C) as a direct
/// sum, then derives the gain H = B*(C*B)^(-1) from a basis B of A*S_k
/// (S_{-1} is all of the state space, so p = 1 is the invertible-C case).
/// Throws Error(not_deadbeat_observable) when no p <= n works.
LinearDeadbeatObserver design_observer(const RationalMatrix& a, const RationalMatrix& c);

RealVector observer_step(const LinearDeadbeatObserver& obs, const RealVector& xhat, const RealVector& y);
RationalVector observer_step_exact(const LinearDeadbeatObserver& obs, const RationalVector& xhat,
                                   const RationalVector& y);

/// Structured-text bundle carrying A, C, H, L and the horizon p.
void write_observer(std::ostream& out, const LinearDeadbeatObserver& obs);
LinearDeadbeatObserver read_observer(std::istream& in);

}  // namespace deadbeat
