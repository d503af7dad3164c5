#include "lsa/lsa_tr.hpp"

#include <algorithm>
#include <utility>

#include "lsa/errors.hpp"
#include "lsa/submodular.hpp"

namespace lsa {

namespace {

SolverTrace run_trust_region(const BinaryEnergy& e, const Decomposition& dec,
    const TrustRegionParams& params, const Labeling& init)
{
  params.validate();
  if (init.size() != e.num_vars())
    throw dimension_error("initial labeling length does not match energy");

  const Stopwatch solve_clock;
  SolverTrace trace;
  Labeling s = init;
  double e_cur = eval_energy(e, s);
  double lambda = params.lambda0;
  // proposal rejected from the current labeling; lambda only returns to a
  // rejected value through null steps, so seeing the same rejected proposal
  // twice means the remaining schedule is a deterministic cycle
  Labeling last_rejected;

  for (int iter = 0; iter < params.max_iters; ++iter) {
    const Stopwatch iter_clock;
    const LinearTerms taylor = taylor_linearize_sup(dec, s);
    const BinaryEnergy model = build_lagrangian(dec, taylor, s, 0.0);
    const BinaryEnergy lagrangian = build_lagrangian(dec, taylor, s, lambda);
    const MinimizeResult sol = minimize_submodular(lagrangian);

    const double predicted = eval_energy(model, s) - eval_energy(model, sol.labeling);
    const double e_star = eval_energy(e, sol.labeling);
    const double actual = e_cur - e_star;
    const bool usable = predicted > 0.0;
    const bool accepted = usable && actual / predicted > params.tau1;

    TraceRow row;
    row.iter = iter;
    row.lambda = lambda;
    row.energy = e_cur;
    row.predicted = predicted;
    row.actual = actual;
    row.accepted = accepted;
    row.wall_ms = iter_clock.ms();
    trace.rows.push_back(row);

    if (accepted) {
      s = sol.labeling;
      e_cur = e_star;
      last_rejected = Labeling();
    } else if (usable) {
      if (sol.labeling == last_rejected) {
        trace.termination = "converged";
        break;
      }
      last_rejected = sol.labeling;
    }

    if (!usable) {
      // nothing gains over the anchor at this lambda: grow the region, stop
      // once even an essentially unconstrained solve proposes nothing
      if (lambda <= params.lambda_min) {
        trace.termination = "converged";
        break;
      }
      lambda /= params.lambda_factor;
    } else if (actual / predicted > params.tau2) {
      lambda /= params.lambda_factor;
    } else {
      lambda = std::min(lambda * params.lambda_factor, params.lambda_max);
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

void TrustRegionParams::validate() const
{
  if (!(lambda0 > 0.0))
    throw parameter_error("lambda0 must be positive");
  if (!(lambda_factor > 1.0))
    throw parameter_error("lambda_factor must exceed 1");
  if (!(tau1 <= tau2))
    throw parameter_error("tau1 must not exceed tau2");
  if (!(lambda_max > lambda0))
    throw parameter_error("lambda_max must exceed lambda0");
  if (!(lambda_min > 0.0))
    throw parameter_error("lambda_min must be positive");
  if (max_iters < 1)
    throw parameter_error("max_iters must be positive");
}

LinearTerms taylor_linearize_sup(const Decomposition& dec, const Labeling& s_t)
{
  if (s_t.size() != dec.sub.num_vars())
    throw dimension_error("labeling length does not match energy");
  LinearTerms out;
  out.unary.assign(dec.sub.num_vars(), 0.0);
  for (const PairTerm& t : dec.sup_pairs) {
    if (s_t[t.q])
      out.unary[t.p] += t.w;
    if (s_t[t.p])
      out.unary[t.q] += t.w;
    if (s_t[t.p] && s_t[t.q])
      out.constant -= t.w;
  }
  return out;
}

BinaryEnergy build_lagrangian(const Decomposition& dec, const LinearTerms& taylor,
    const Labeling& s_t, double lambda)
{
  const BinaryEnergy& sub = dec.sub;
  if (s_t.size() != sub.num_vars() || static_cast<int>(taylor.unary.size()) != sub.num_vars())
    throw dimension_error("labeling or unary length does not match energy");
  const LinearTerms ham = hamming_unaries(s_t, lambda);
  EnergyBuilder b(sub.num_vars());
  b.add_constant(sub.constant() + taylor.constant + ham.constant);
  for (int p = 0; p < sub.num_vars(); ++p)
    b.add_unary(p, sub.unary()[p] + taylor.unary[p] + ham.unary[p]);
  for (const PairTerm& t : sub.pairwise())
    b.add_pair(t.p, t.q, t.w);
  return b.build();
}

SolverTrace lsa_tr_solve(const BinaryEnergy& e, const TrustRegionParams& params,
    const Labeling& init)
{
  return run_trust_region(e, decompose(e), params, init);
}

SolverTrace lsa_tr_l_solve(const BinaryEnergy& e, const TrustRegionParams& params,
    const Labeling& init)
{
  Decomposition all_linear;
  all_linear.sub = BinaryEnergy(e.num_vars(), e.unary(), {}, e.constant());
  all_linear.sup_pairs = e.pairwise();
  return run_trust_region(e, all_linear, params, init);
}

}
