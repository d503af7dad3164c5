#include "lsa/harness.hpp"

#include <fstream>
#include <ostream>
#include <utility>

#include "lsa/baselines.hpp"
#include "lsa/energy_io.hpp"
#include "lsa/errors.hpp"
#include "lsa/lsa_aux.hpp"
#include "lsa/submodular.hpp"

namespace lsa {

namespace {

Labeling load_init(const std::string& spec, int num_vars)
{
  if (spec == "ones")
    return Labeling::ones(num_vars);
  if (spec == "zeros")
    return Labeling::zeros(num_vars);
  Labeling s = labeling_from_pgm(read_pgm_file(spec));
  if (s.size() != num_vars)
    throw dimension_error("initial labeling size does not match energy");
  return s;
}

// Wraps a one-shot result (brute force, truncation) as a single-row trace so
// every method shares the same reporting path.
SolverTrace single_shot_trace(MinimizeResult result, double wall_ms)
{
  SolverTrace trace;
  TraceRow row;
  row.energy = result.energy;
  row.accepted = true;
  row.wall_ms = wall_ms;
  trace.rows.push_back(row);
  trace.final_labeling = std::move(result.labeling);
  trace.final_energy = result.energy;
  trace.termination = "converged";
  trace.total_ms = wall_ms;
  return trace;
}

void write_summary(std::ostream& out, const RunConfig& cfg, const SolverTrace& trace,
    double energy, const double* truncated_energy)
{
  out << "method=" << cfg.method << '\n';
  out << "seed=" << cfg.seed << '\n';
  out << "energy=" << format_real(energy) << '\n';
  if (truncated_energy)
    out << "truncated_energy=" << format_real(*truncated_energy) << '\n';
  out << "iterations=" << trace.rows.size() << '\n';
  out << "termination=" << trace.termination << '\n';
  out << "wall_ms=" << format_real(trace.total_ms) << '\n';
}

}

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
  const bool known = cfg.method == "lsa-tr" || cfg.method == "lsa-tr-l"
      || cfg.method == "lsa-aux" || cfg.method == "lsa-aux-p" || cfg.method == "icm"
      || cfg.method == "ipfp" || cfg.method == "truncate" || cfg.method == "brute";
  if (!known) {
    err << "unknown method: " << cfg.method << '\n';
    return exit_usage;
  }

  try {
    const BinaryEnergy e = read_energy_file(cfg.energy_path);
    const Labeling init = load_init(cfg.init, e.num_vars());

    SolverTrace trace;
    double truncated_energy = 0.0;
    bool have_truncated = false;

    if (cfg.method == "lsa-tr" || cfg.method == "lsa-tr-l") {
      TrustRegionParams tr = cfg.tr;
      tr.max_iters = cfg.max_iters;
      trace = cfg.method == "lsa-tr" ? lsa_tr_solve(e, tr, init)
                                     : lsa_tr_l_solve(e, tr, init);
    } else if (cfg.method == "lsa-aux" || cfg.method == "lsa-aux-p") {
      BoundVariant variant;
      if (cfg.method == "lsa-aux-p") {
        variant.kind = BoundKind::permutation;
        variant.rng_seed = cfg.seed;
      }
      trace = lsa_aux_solve(e, variant, init, cfg.max_iters);
    } else if (cfg.method == "icm") {
      trace = parallel_icm_solve(e, init, cfg.max_iters);
    } else if (cfg.method == "ipfp") {
      trace = ipfp_solve(e, init, cfg.max_iters);
    } else if (cfg.method == "truncate") {
      const Stopwatch clock;
      MinimizeResult sol = minimize_submodular(truncate(e));
      truncated_energy = sol.energy;
      have_truncated = true;
      sol.energy = eval_energy(e, sol.labeling);
      trace = single_shot_trace(std::move(sol), clock.ms());
    } else {
      const Stopwatch clock;
      trace = single_shot_trace(brute_force_min(e), clock.ms());
    }

    const double energy = eval_energy(e, trace.final_labeling);

    if (!cfg.labeling_out.empty()) {
      int w = cfg.width;
      int h = cfg.height;
      if (w <= 0 && h <= 0) {
        w = e.num_vars();
        h = 1;
      }
      write_pgm_file(cfg.labeling_out, pgm_from_labeling(trace.final_labeling, w, h));
    }
    if (!cfg.trace_out.empty())
      write_trace_csv_file(cfg.trace_out, trace);
    if (cfg.summary_out.empty()) {
      write_summary(out, cfg, trace, energy, have_truncated ? &truncated_energy : nullptr);
    } else {
      std::ofstream sum(cfg.summary_out);
      if (!sum)
        throw io_error("cannot open summary file: " + cfg.summary_out);
      write_summary(sum, cfg, trace, energy, have_truncated ? &truncated_energy : nullptr);
      sum.flush();
      if (!sum)
        throw io_error("write failed: " + cfg.summary_out);
    }
    return exit_ok;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return exit_runtime;
  }
}

int cmd_make_deconv(int width, int height, double sigma, std::uint64_t seed,
    const ShapeSpec& shape, const std::string& out_prefix,
    std::ostream& out, std::ostream& err)
{
  try {
    const DeconvInstance inst = synthesize_deconv_instance(width, height, shape, sigma, seed);
    const BinaryEnergy e = build_deconvolution_energy(inst.observed);

    const std::string observed_path = out_prefix + "_observed.pgm";
    const std::string truth_path = out_prefix + "_truth.pgm";
    const std::string energy_path = out_prefix + ".energy";
    write_pgm_file(observed_path, pgm_from_gray(inst.observed, 65535));
    write_pgm_file(truth_path, pgm_from_labeling(inst.ground_truth, width, height));
    write_energy_file(energy_path, e);

    out << "observed=" << observed_path << '\n';
    out << "truth=" << truth_path << '\n';
    out << "energy=" << energy_path << '\n';
    return exit_ok;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return exit_runtime;
  }
}

int cmd_make_repulsion(const std::string& image_path, const RepulsionParams& params,
    const std::string& out_path, std::ostream& out, std::ostream& err)
{
  try {
    const GrayImage img = gray_from_pgm(read_pgm_file(image_path));
    const BinaryEnergy e = build_repulsion_energy(img, params);
    write_energy_file(out_path, e);

    out << "mu_fg=" << format_real(params.mu_fg) << '\n';
    out << "mu_bg=" << format_real(params.mu_bg) << '\n';
    out << "sigma_app=" << format_real(params.sigma_app) << '\n';
    out << "lambda_reg=" << format_real(params.lambda_reg) << '\n';
    out << "c=" << format_real(params.c) << '\n';
    out << "vars=" << e.num_vars() << '\n';
    out << "pairs=" << e.pairwise().size() << '\n';
    out << "energy=" << out_path << '\n';
    return exit_ok;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return exit_runtime;
  }
}

int cmd_eval(const std::string& energy_path, const std::string& labeling_path,
    std::ostream& out, std::ostream& err)
{
  try {
    const BinaryEnergy e = read_energy_file(energy_path);
    const Labeling s = labeling_from_pgm(read_pgm_file(labeling_path));
    if (s.size() != e.num_vars())
      throw dimension_error("labeling size does not match energy");
    out << format_real(eval_energy(e, s)) << '\n';
    return exit_ok;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return exit_runtime;
  }
}

}
