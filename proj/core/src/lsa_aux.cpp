#include "lsa/lsa_aux.hpp"

#include <utility>

#include "lsa/errors.hpp"
#include "lsa/rng.hpp"
#include "lsa/submodular.hpp"

namespace lsa {

namespace {

constexpr double decrease_tol = 1e-10;
constexpr int max_stall = 5;

bool pick_green(const BoundVariant& variant, int iteration, std::size_t pair_index)
{
  const std::uint64_t draw = variant.redraw_each_iter ? static_cast<std::uint64_t>(iteration) : 0;
  return (hash_combine(hash_combine(variant.rng_seed, draw), pair_index) & 1) == 0;
}

}

std::vector<double> aux_bound_unaries(const Decomposition& dec, const Labeling& s_t,
    const BoundVariant& variant, int iteration)
{
  if (s_t.size() != dec.sub.num_vars())
    throw dimension_error("labeling length does not match energy");
  std::vector<double> u(dec.sub.num_vars(), 0.0);
  for (std::size_t i = 0; i < dec.sup_pairs.size(); ++i) {
    const PairTerm& t = dec.sup_pairs[i];
    const bool sp = s_t[t.p] != 0;
    const bool sq = s_t[t.q] != 0;
    if (!sp && sq) {
      u[t.p] += t.w;
    } else if (sp && !sq) {
      u[t.q] += t.w;
    } else if (variant.kind == BoundKind::standard) {
      u[t.p] += t.w / 2;
      u[t.q] += t.w / 2;
    } else if (pick_green(variant, iteration, i)) {
      u[t.p] += t.w;
    } else {
      u[t.q] += t.w;
    }
  }
  return u;
}

BinaryEnergy build_auxiliary(const Decomposition& dec, const std::vector<double>& u_t)
{
  const BinaryEnergy& sub = dec.sub;
  if (static_cast<int>(u_t.size()) != sub.num_vars())
    throw dimension_error("unary length does not match energy");
  EnergyBuilder b(sub.num_vars());
  b.add_constant(sub.constant());
  for (int p = 0; p < sub.num_vars(); ++p)
    b.add_unary(p, sub.unary()[p] + u_t[p]);
  for (const PairTerm& t : sub.pairwise())
    b.add_pair(t.p, t.q, t.w);
  return b.build();
}

SolverTrace lsa_aux_solve(const BinaryEnergy& e, const BoundVariant& variant,
    const Labeling& init, int max_iters)
{
  if (init.size() != e.num_vars())
    throw dimension_error("initial labeling length does not match energy");
  if (max_iters < 1)
    throw parameter_error("max_iters must be positive");

  const Stopwatch solve_clock;
  const Decomposition dec = decompose(e);
  SolverTrace trace;
  Labeling s = init;
  double e_cur = eval_energy(e, s);
  int stall = 0;

  for (int iter = 0; iter < max_iters; ++iter) {
    const Stopwatch iter_clock;
    const std::vector<double> u = aux_bound_unaries(dec, s, variant, iter);
    const BinaryEnergy bound = build_auxiliary(dec, u);
    const MinimizeResult sol = minimize_submodular(bound);
    const double predicted = eval_energy(bound, s) - eval_energy(bound, sol.labeling);
    const double e_next = eval_energy(e, sol.labeling);
    const double actual = e_cur - e_next;

    TraceRow row;
    row.iter = iter;
    row.energy = e_cur;
    row.predicted = predicted;
    row.actual = actual;
    row.accepted = true;
    row.wall_ms = iter_clock.ms();
    trace.rows.push_back(row);

    if (variant.kind == BoundKind::standard) {
      if (actual > 0.0) {
        s = sol.labeling;
        e_cur = e_next;
      }
      if (actual <= decrease_tol) {
        trace.termination = "converged";
        break;
      }
    } else {
      if (actual > decrease_tol)
        stall = 0;
      else
        ++stall;
      if (actual >= 0.0) {
        // equal-energy moves are taken: a redrawn bound may open a strict
        // descent from the new labeling
        s = sol.labeling;
        e_cur = e_next;
      }
      if (stall >= max_stall) {
        trace.termination = "converged";
        break;
      }
    }
  }

  if (trace.termination.empty())
    trace.termination = "max_iters";
  trace.final_labeling = std::move(s);
  trace.final_energy = e_cur;
  trace.total_ms = solve_clock.ms();
  return trace;
}

}
