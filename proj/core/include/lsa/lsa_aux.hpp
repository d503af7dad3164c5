#ifndef LSA_LSA_AUX_HPP
#define LSA_LSA_AUX_HPP

#include <cstdint>
#include <vector>

#include "lsa/energy.hpp"
#include "lsa/trace.hpp"

namespace lsa {

enum class BoundKind { standard, permutation };

struct BoundVariant {
  BoundKind kind = BoundKind::standard;
  std::uint64_t rng_seed = 0;
  bool redraw_each_iter = true;  // permutation only: fresh coins every iteration
};

// Tightest linear upper bound on the supermodular part around s_t. Per pair
// (p,q,w>0), using the current state (s_t[p], s_t[q]):
//   (0,1) -> w*x;  (1,0) -> w*y;
//   (0,0), (1,1) -> (w/2)x + (w/2)y (standard), or a seeded coin between
//                   w*x and w*y (permutation).
// Each choice dominates w*x*y on all four configurations and is tight at the
// current state and at (0,0).
std::vector<double> aux_bound_unaries(const Decomposition& dec, const Labeling& s_t,
    const BoundVariant& variant, int iteration = 0);

// A_t(S) = sum_p u_t[p]*s_p + eval(dec.sub, S): a submodular upper bound of
// the decomposed energy that touches it at the labeling u_t was built from.
BinaryEnergy build_auxiliary(const Decomposition& dec, const std::vector<double>& u_t);

// Majorize-minimize descent: globally minimize the auxiliary bound around the
// current labeling, move there, rebuild the bound, repeat.
SolverTrace lsa_aux_solve(const BinaryEnergy& e, const BoundVariant& variant,
    const Labeling& init, int max_iters = 1000);

}

#endif
