#include "lsa/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>

#include "lsa/errors.hpp"

namespace lsa {

namespace {

constexpr double ipfp_move_tol = 1e-9;

// Linear coefficients of the first-order model at s_t: unary[p] plus the
// scatter w*s_t[q] from every incident pair.
std::vector<double> model_coefficients(const BinaryEnergy& e, const Labeling& s_t)
{
  std::vector<double> g = e.unary();
  for (const PairTerm& t : e.pairwise()) {
    if (s_t[t.q])
      g[t.p] += t.w;
    if (s_t[t.p])
      g[t.q] += t.w;
  }
  return g;
}

}

MinimizeResult brute_force_min(const BinaryEnergy& e)
{
  const int n = e.num_vars();
  if (n > 24)
    throw parameter_error("brute force limited to 24 variables");
  Labeling s = Labeling::zeros(n);
  MinimizeResult best{s, eval_energy(e, s)};
  const std::uint32_t count = std::uint32_t{1} << n;
  for (std::uint32_t mask = 1; mask < count; ++mask) {
    for (int p = 0; p < n; ++p)
      s[p] = static_cast<std::uint8_t>((mask >> (n - 1 - p)) & 1);
    const double v = eval_energy(e, s);
    if (v < best.energy) {
      best.labeling = s;
      best.energy = v;
    }
  }
  return best;
}

BinaryEnergy truncate(const BinaryEnergy& e)
{
  std::vector<PairTerm> kept;
  for (const PairTerm& t : e.pairwise())
    if (t.w <= 0.0)
      kept.push_back(t);
  return BinaryEnergy(e.num_vars(), e.unary(), std::move(kept), e.constant());
}

Labeling parallel_icm_step(const BinaryEnergy& e, const Labeling& s_t)
{
  if (s_t.size() != e.num_vars())
    throw dimension_error("labeling length does not match energy");
  const std::vector<double> g = model_coefficients(e, s_t);
  Labeling out = s_t;
  for (int p = 0; p < e.num_vars(); ++p) {
    if (g[p] < 0.0)
      out[p] = 1;
    else if (g[p] > 0.0)
      out[p] = 0;
  }
  return out;
}

SolverTrace parallel_icm_solve(const BinaryEnergy& e, const Labeling& init, int max_iters)
{
  if (init.size() != e.num_vars())
    throw dimension_error("initial labeling length does not match energy");
  if (max_iters < 1)
    throw parameter_error("max_iters must be positive");

  const Stopwatch solve_clock;
  SolverTrace trace;
  Labeling s = init;
  Labeling prev = init;
  double e_cur = eval_energy(e, s);
  MinimizeResult best{s, e_cur};

  for (int iter = 0; iter < max_iters; ++iter) {
    const Stopwatch iter_clock;
    const std::vector<double> g = model_coefficients(e, s);
    Labeling next = s;
    double predicted = 0.0;
    for (int p = 0; p < e.num_vars(); ++p) {
      if (g[p] < 0.0)
        next[p] = 1;
      else if (g[p] > 0.0)
        next[p] = 0;
      if (next[p] != s[p])
        predicted += next[p] ? -g[p] : g[p];
    }
    const double e_next = eval_energy(e, next);

    TraceRow row;
    row.iter = iter;
    row.energy = e_cur;
    row.predicted = predicted;
    row.actual = e_cur - e_next;
    row.accepted = true;
    row.wall_ms = iter_clock.ms();
    trace.rows.push_back(row);

    const bool fixpoint = next == s;
    const bool cycling = iter > 0 && next == prev;
    prev = s;
    s = next;
    e_cur = e_next;
    if (e_cur < best.energy) {
      best.labeling = s;
      best.energy = e_cur;
    }
    if (fixpoint || cycling) {
      trace.termination = "converged";
      break;
    }
  }

  if (trace.termination.empty())
    trace.termination = "max_iters";
  trace.final_labeling = std::move(best.labeling);
  trace.final_energy = best.energy;
  trace.total_ms = solve_clock.ms();
  return trace;
}

double eval_relaxed(const BinaryEnergy& e, const RelaxedPoint& x)
{
  if (static_cast<int>(x.size()) != e.num_vars())
    throw dimension_error("point length does not match energy");
  double acc = e.constant();
  for (int p = 0; p < e.num_vars(); ++p)
    acc += e.unary()[p] * x[p];
  for (const PairTerm& t : e.pairwise())
    acc += t.w * x[t.p] * x[t.q];
  return acc;
}

SolverTrace ipfp_solve(const BinaryEnergy& e, const Labeling& init, int max_iters)
{
  if (init.size() != e.num_vars())
    throw dimension_error("initial labeling length does not match energy");
  if (max_iters < 1)
    throw parameter_error("max_iters must be positive");

  const Stopwatch solve_clock;
  const int n = e.num_vars();
  SolverTrace trace;
  RelaxedPoint x(n);
  for (int p = 0; p < n; ++p)
    x[p] = init[p] ? 1.0 : 0.0;

  for (int iter = 0; iter < max_iters; ++iter) {
    const Stopwatch iter_clock;
    const double phi0 = eval_relaxed(e, x);

    std::vector<double> g = e.unary();
    for (const PairTerm& t : e.pairwise()) {
      g[t.p] += t.w * x[t.q];
      g[t.q] += t.w * x[t.p];
    }
    std::vector<double> d(n);
    double b = 0.0;
    for (int p = 0; p < n; ++p) {
      double target;
      if (g[p] < 0.0)
        target = 1.0;
      else if (g[p] > 0.0)
        target = 0.0;
      else
        target = x[p] > 0.5 ? 1.0 : 0.0;
      d[p] = target - x[p];
      b += g[p] * d[p];
    }
    double a = 0.0;
    for (const PairTerm& t : e.pairwise())
      a += t.w * d[t.p] * d[t.q];

    // phi(t) = phi0 + b*t + a*t^2 on [0,1]; candidates are the endpoints and
    // the interior stationary point of a convex parabola
    double t_star = 0.0;
    double phi_star = phi0;
    auto consider = [&](double t) {
      const double v = phi0 + b * t + a * t * t;
      if (v < phi_star) {
        phi_star = v;
        t_star = t;
      }
    };
    consider(1.0);
    if (a > 0.0) {
      const double t_in = -b / (2.0 * a);
      if (t_in > 0.0 && t_in < 1.0)
        consider(t_in);
    }

    double move = 0.0;
    for (int p = 0; p < n; ++p)
      move = std::max(move, std::abs(t_star * d[p]));

    TraceRow row;
    row.iter = iter;
    row.energy = phi0;
    row.predicted = 0.0 - b * t_star;
    row.actual = phi0 - phi_star;
    row.accepted = true;
    row.wall_ms = iter_clock.ms();
    trace.rows.push_back(row);

    if (t_star == 0.0 || move < ipfp_move_tol) {
      trace.termination = "converged";
      break;
    }
    for (int p = 0; p < n; ++p)
      x[p] = std::clamp(x[p] + t_star * d[p], 0.0, 1.0);
  }

  if (trace.termination.empty())
    trace.termination = "max_iters";
  Labeling rounded = Labeling::zeros(n);
  for (int p = 0; p < n; ++p)
    rounded[p] = x[p] > 0.5 ? 1 : 0;
  trace.final_energy = eval_energy(e, rounded);
  trace.final_labeling = std::move(rounded);
  trace.total_ms = solve_clock.ms();
  return trace;
}

}
