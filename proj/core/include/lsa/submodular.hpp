#ifndef LSA_SUBMODULAR_HPP
#define LSA_SUBMODULAR_HPP

#include "lsa/energy.hpp"
#include "lsa/maxflow.hpp"

namespace lsa {

// Encodes a submodular energy (all pairwise w <= 0) as an s-t cut problem.
// For every labeling S: cut_cost(net, S) + net.offset() == eval_energy(e, S),
// where source-side membership means label 1.
FlowNetwork build_flow_network(const BinaryEnergy& e);

// Global minimum of a submodular energy via max-flow. The returned labeling
// is the canonical minimal source side (residual reachability).
MinimizeResult minimize_submodular(const BinaryEnergy& e);

}

#endif
