#include "lsa/submodular.hpp"

#include <algorithm>
#include <utility>

#include "lsa/errors.hpp"

namespace lsa {

FlowNetwork build_flow_network(const BinaryEnergy& e)
{
  FlowNetwork net(e.num_vars());
  std::vector<double> a = e.unary();
  for (const PairTerm& t : e.pairwise()) {
    if (t.w > 0.0)
      throw not_submodular_error("positive pairwise coefficient");
    if (t.w == 0.0)
      continue;
    // w * s_p * s_q = w * s_p + (-w) * s_p * (1 - s_q) for w <= 0
    a[t.p] += t.w;
    net.add_arc(t.p, t.q, -t.w);
  }
  net.add_offset(e.constant());
  for (int p = 0; p < e.num_vars(); ++p) {
    double m = std::min(0.0, a[p]);
    net.add_offset(m);
    if (a[p] - m > 0.0)
      net.add_arc(p, net.sink(), a[p] - m);
    if (-m > 0.0)
      net.add_arc(net.source(), p, -m);
  }
  return net;
}

MinimizeResult minimize_submodular(const BinaryEnergy& e)
{
  FlowNetwork net = build_flow_network(e);
  MaxFlowResult res = max_flow(net);
  MinimizeResult out;
  out.labeling = std::move(res.source_side);
  out.energy = eval_energy(e, out.labeling);
  return out;
}

}
