#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "lsa/harness.hpp"

int main(int argc, char** argv)
{
  CLI::App app{"binary pairwise energy minimization toolkit"};
  app.require_subcommand(1);

  lsa::RunConfig cfg;
  CLI::App* solve = app.add_subcommand("solve", "run a solver on an energy file");
  solve->add_option("--energy", cfg.energy_path, "energy file")->required();
  solve->add_option("--method", cfg.method,
      "lsa-tr | lsa-tr-l | lsa-aux | lsa-aux-p | icm | ipfp | truncate | brute");
  solve->add_option("--init", cfg.init, "ones | zeros | path to a binary PGM");
  solve->add_option("--seed", cfg.seed, "seed for randomized methods");
  solve->add_option("--max-iters", cfg.max_iters, "hard iteration cap");
  solve->add_option("--lambda0", cfg.tr.lambda0, "initial trust region multiplier");
  solve->add_option("--lambda-factor", cfg.tr.lambda_factor, "multiplier adjustment factor");
  solve->add_option("--tau1", cfg.tr.tau1, "step acceptance threshold");
  solve->add_option("--tau2", cfg.tr.tau2, "region growth threshold");
  solve->add_option("--lambda-max", cfg.tr.lambda_max, "upper clamp on the multiplier");
  solve->add_option("--lambda-min", cfg.tr.lambda_min, "null steps at or below this multiplier converge");
  solve->add_option("--labeling-out", cfg.labeling_out, "final labeling PGM path");
  solve->add_option("--trace-out", cfg.trace_out, "per-iteration CSV path");
  solve->add_option("--summary-out", cfg.summary_out, "key=value summary path (default stdout)");
  solve->add_option("--width", cfg.width, "labeling image width");
  solve->add_option("--height", cfg.height, "labeling image height");

  int mk_width = 32;
  int mk_height = 32;
  double mk_sigma = 0.05;
  std::uint64_t mk_seed = 0;
  std::string mk_shape = "disk";
  double mk_extent = 0.5;
  std::string mk_out = "deconv";
  CLI::App* mkd = app.add_subcommand("make-deconv", "synthesize a deconvolution instance");
  mkd->add_option("--width", mk_width, "image width");
  mkd->add_option("--height", mk_height, "image height");
  mkd->add_option("--sigma", mk_sigma, "noise standard deviation");
  mkd->add_option("--seed", mk_seed, "noise seed");
  mkd->add_option("--shape", mk_shape, "disk | rect ground truth");
  mkd->add_option("--extent", mk_extent, "shape size as a fraction of min(width, height)");
  mkd->add_option("--out", mk_out, "output prefix");

  std::string rep_image;
  std::string rep_out = "repulsion.energy";
  lsa::RepulsionParams rp;
  CLI::App* mkr = app.add_subcommand("make-repulsion", "build a segmentation energy from an image");
  mkr->add_option("--image", rep_image, "input PGM image")->required();
  mkr->add_option("--out", rep_out, "output energy path");
  mkr->add_option("--mu-fg", rp.mu_fg, "foreground appearance mean");
  mkr->add_option("--mu-bg", rp.mu_bg, "background appearance mean");
  mkr->add_option("--sigma-app", rp.sigma_app, "appearance standard deviation");
  mkr->add_option("--lambda-reg", rp.lambda_reg, "regularization weight");
  mkr->add_option("--c", rp.c, "attraction/repulsion intensity threshold");

  std::string ev_energy;
  std::string ev_labeling;
  CLI::App* ev = app.add_subcommand("eval", "evaluate a labeling under an energy");
  ev->add_option("--energy", ev_energy, "energy file")->required();
  ev->add_option("--labeling", ev_labeling, "labeling PGM")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex);
    return code == 0 ? 0 : lsa::exit_usage;
  }

  if (solve->parsed())
    return lsa::cmd_solve(cfg, std::cout, std::cerr);
  if (mkd->parsed()) {
    lsa::ShapeSpec shape;
    if (mk_shape == "disk") {
      shape.kind = lsa::ShapeKind::disk;
    } else if (mk_shape == "rect") {
      shape.kind = lsa::ShapeKind::rectangle;
    } else {
      std::cerr << "unknown shape: " << mk_shape << '\n';
      return lsa::exit_usage;
    }
    shape.extent = mk_extent;
    return lsa::cmd_make_deconv(mk_width, mk_height, mk_sigma, mk_seed, shape, mk_out,
        std::cout, std::cerr);
  }
  if (mkr->parsed())
    return lsa::cmd_make_repulsion(rep_image, rp, rep_out, std::cout, std::cerr);
  return lsa::cmd_eval(ev_energy, ev_labeling, std::cout, std::cerr);
}
