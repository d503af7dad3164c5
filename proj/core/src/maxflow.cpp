#include "lsa/maxflow.hpp"

#include <algorithm>
#include <limits>

namespace lsa {

FlowNetwork::FlowNetwork(int num_vars)
: num_vars_(num_vars)
, adj_(num_vars >= 0 ? num_vars + 2 : 0)
{
  if (num_vars < 0)
    throw parameter_error("negative variable count");
}

int FlowNetwork::add_arc(int from, int to, double cap)
{
  if (from < 0 || from >= num_nodes() || to < 0 || to >= num_nodes())
    throw parameter_error("arc endpoint out of range");
  if (!(cap >= 0.0))
    throw parameter_error("arc capacity must be nonnegative");
  int id = static_cast<int>(arcs_.size());
  arcs_.push_back({from, to, cap});
  arcs_.push_back({to, from, 0.0});
  orig_cap_.push_back(cap);
  orig_cap_.push_back(0.0);
  adj_[from].push_back(id);
  adj_[to].push_back(id + 1);
  return id;
}

MaxFlowResult max_flow(FlowNetwork& net)
{
  std::vector<FlowNetwork::Arc>& arcs = net.arcs_;
  const std::vector<std::vector<int>>& adj = net.adj_;
  const int n = net.num_nodes();
  const int s = net.source();
  const int t = net.sink();

  double max_cap = 0.0;
  for (const FlowNetwork::Arc& a : arcs)
    max_cap = std::max(max_cap, a.cap);
  const double eps = max_cap * 1e-12;

  std::vector<int> level(n);
  std::vector<std::size_t> it(n);
  std::vector<int> queue;
  queue.reserve(n);

  auto bfs = [&]() -> bool {
    std::fill(level.begin(), level.end(), -1);
    queue.clear();
    queue.push_back(s);
    level[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      for (int id : adj[u]) {
        const FlowNetwork::Arc& a = arcs[id];
        if (a.cap > eps && level[a.to] == -1) {
          level[a.to] = level[u] + 1;
          queue.push_back(a.to);
        }
      }
    }
    return level[t] != -1;
  };

  double total = 0.0;
  std::vector<int> path;  // arc ids forming the current partial path from s

  while (bfs()) {
    std::fill(it.begin(), it.end(), std::size_t{0});
    path.clear();
    int u = s;
    while (true) {
      if (u == t) {
        double bottleneck = std::numeric_limits<double>::infinity();
        for (int id : path)
          bottleneck = std::min(bottleneck, arcs[id].cap);
        for (int id : path) {
          arcs[id].cap -= bottleneck;
          arcs[id ^ 1].cap += bottleneck;
        }
        total += bottleneck;
        // retreat to the tail of the first arc the augmentation saturated
        std::size_t keep = 0;
        while (keep < path.size() && arcs[path[keep]].cap > eps)
          ++keep;
        path.resize(keep);
        u = path.empty() ? s : arcs[path.back()].to;
        continue;
      }
      bool advanced = false;
      while (it[u] < adj[u].size()) {
        int id = adj[u][it[u]];
        const FlowNetwork::Arc& a = arcs[id];
        if (a.cap > eps && level[a.to] == level[u] + 1) {
          path.push_back(id);
          u = a.to;
          advanced = true;
          break;
        }
        ++it[u];
      }
      if (!advanced) {
        if (u == s)
          break;
        level[u] = -1;  // dead end for this phase
        int back = path.back();
        path.pop_back();
        u = arcs[back].from;
        ++it[u];
      }
    }
  }

  MaxFlowResult res;
  res.flow = total;
  res.source_side = Labeling::zeros(net.num_vars());
  std::vector<char> seen(n, 0);
  queue.clear();
  queue.push_back(s);
  seen[s] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int id : adj[u]) {
      const FlowNetwork::Arc& a = arcs[id];
      if (a.cap > eps && !seen[a.to]) {
        seen[a.to] = 1;
        queue.push_back(a.to);
      }
    }
  }
  for (int p = 0; p < net.num_vars(); ++p)
    res.source_side[p] = seen[p];
  return res;
}

double cut_cost(const FlowNetwork& net, const Labeling& s)
{
  if (s.size() != net.num_vars())
    throw dimension_error("labeling length does not match network");
  auto side = [&](int node) -> int {
    if (node == net.source())
      return 1;
    if (node == net.sink())
      return 0;
    return s[node];
  };
  double cost = 0.0;
  for (const FlowNetwork::Arc& a : net.arcs())
    if (side(a.from) == 1 && side(a.to) == 0)
      cost += a.cap;
  return cost;
}

}
