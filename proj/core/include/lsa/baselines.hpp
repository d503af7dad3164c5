#ifndef LSA_BASELINES_HPP
#define LSA_BASELINES_HPP

#include <vector>

#include "lsa/energy.hpp"
#include "lsa/trace.hpp"

namespace lsa {

// Relaxed labeling: componentwise in [0,1].
using RelaxedPoint = std::vector<double>;

// Exact global minimum by enumeration; ties broken toward the
// lexicographically smallest labeling. Guarded to num_vars <= 24.
MinimizeResult brute_force_min(const BinaryEnergy& e);

// Drops every pairwise term with w > 0; unaries, constant and nonpositive
// pairs are kept, so the result is submodular.
BinaryEnergy truncate(const BinaryEnergy& e);

// Integer minimizer of the full first-order model at s_t, all variables
// updated simultaneously: s_p = 1 iff the linear coefficient at p is
// negative; a zero coefficient keeps s_t[p].
Labeling parallel_icm_step(const BinaryEnergy& e, const Labeling& s_t);

// Repeats parallel_icm_step until a fixed point or a two-cycle; reports the
// best labeling seen (simultaneous flips can raise the energy).
SolverTrace parallel_icm_solve(const BinaryEnergy& e, const Labeling& init,
    int max_iters = 1000);

// constant + sum_p unary[p]*x_p + sum_{p<q} w*x_p*x_q at a relaxed point.
double eval_relaxed(const BinaryEnergy& e, const RelaxedPoint& x);

// Relaxed descent: take the integer minimizer of the linearization at the
// current point, then move along the segment toward it by the exact 1-D
// quadratic line-search step. Stops when the step size is 0 or the move is
// below 1e-9 in infinity norm; the final labeling rounds the relaxed point
// at 0.5 (ties to 0) and final_energy is its exact integer energy, while
// trace rows record relaxed energies.
SolverTrace ipfp_solve(const BinaryEnergy& e, const Labeling& init,
    int max_iters = 1000);

}

#endif
