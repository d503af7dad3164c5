#ifndef LSA_MAXFLOW_HPP
#define LSA_MAXFLOW_HPP

#include <vector>

#include "lsa/energy.hpp"

namespace lsa {

struct MaxFlowResult;

/// s-t network over the variables of an energy plus source and sink.
/// Arcs come in forward/reverse pairs: arc i^1 is the reverse of arc i, and
/// forward arcs have even index. Capacities are nonnegative reals. The
/// constant `offset` accumulates whatever construction shifted out of the
/// capacities so that cut cost plus offset equals the encoded energy.
///
/// Single-use: max_flow mutates the residual capacities in place.
class FlowNetwork {
public:
  struct Arc {
    int from;
    int to;
    double cap;  // residual capacity
  };

  explicit FlowNetwork(int num_vars);

  int num_vars() const { return num_vars_; }
  int num_nodes() const { return num_vars_ + 2; }
  int source() const { return num_vars_; }
  int sink() const { return num_vars_ + 1; }

  /// Adds a forward arc with the given capacity and its zero-capacity
  /// reverse. Returns the forward arc index.
  int add_arc(int from, int to, double cap);

  void add_offset(double c) { offset_ += c; }
  double offset() const { return offset_; }

  const std::vector<Arc>& arcs() const { return arcs_; }
  double original_capacity(int arc) const { return orig_cap_[arc]; }
  const std::vector<int>& out_arcs(int node) const { return adj_[node]; }

private:
  friend MaxFlowResult max_flow(FlowNetwork& net);

  int num_vars_;
  std::vector<Arc> arcs_;
  std::vector<double> orig_cap_;
  std::vector<std::vector<int>> adj_;
  double offset_ = 0.0;
};

struct MaxFlowResult {
  double flow = 0.0;
  Labeling source_side;  // 1 = node reachable from source in the residual graph
};

/// Dinic max-flow. Residuals at or below a relative 1e-12 threshold count as
/// saturated. The returned assignment is the canonical minimal source side.
MaxFlowResult max_flow(FlowNetwork& net);

/// Capacity of the cut induced by assigning label-1 nodes to the source side,
/// using the capacities currently stored in the network (call before
/// max_flow).
double cut_cost(const FlowNetwork& net, const Labeling& s);

}

#endif
