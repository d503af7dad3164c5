#ifndef LSA_LSA_TR_HPP
#define LSA_LSA_TR_HPP

#include "lsa/energy.hpp"
#include "lsa/trace.hpp"

namespace lsa {

struct TrustRegionParams {
  double lambda0 = 1.0;
  double lambda_factor = 2.0;
  double tau1 = 0.0;
  double tau2 = 0.25;
  int max_iters = 1000;
  double lambda_max = 1e6;
  // null step at or below this lambda means the model has no descent
  // direction left, so the solver reports convergence
  double lambda_min = 1e-8;

  void validate() const;
};

// First-order model of the supermodular part around s_t: for each pair
// (p,q,w) in dec.sup_pairs, unary[p] += w*s_t[q], unary[q] += w*s_t[p],
// constant -= w*s_t[p]*s_t[q]. The model energy
//   E_t(S) = eval(dec.sub, S) + sum_p unary[p]*s_p + constant
// touches the original energy at s_t and, per pair, agrees with w*x*y at
// three of the four binary configurations (all four when w = 0).
LinearTerms taylor_linearize_sup(const Decomposition& dec, const Labeling& s_t);

// Submodular energy equal to E_t(S) + lambda*hamming(S, s_t) for all S.
BinaryEnergy build_lagrangian(const Decomposition& dec, const LinearTerms& taylor,
    const Labeling& s_t, double lambda);

// Trust-region descent: globally minimize the Lagrangian of the locally
// linearized energy, accept the step if the reduction ratio actual/predicted
// exceeds tau1, and shrink or grow the trust region by adapting lambda
// against tau2. Supermodular pairs are linearized, submodular ones kept.
SolverTrace lsa_tr_solve(const BinaryEnergy& e, const TrustRegionParams& params,
    const Labeling& init);

// Same engine with every pairwise term linearized, submodular ones included;
// each subproblem is unary plus the Hamming penalty.
SolverTrace lsa_tr_l_solve(const BinaryEnergy& e, const TrustRegionParams& params,
    const Labeling& init);

}

#endif
