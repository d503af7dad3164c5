#ifndef LSA_HARNESS_HPP
#define LSA_HARNESS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include "lsa/lsa_tr.hpp"
#include "lsa/problems.hpp"

namespace lsa {

// Exit statuses shared by the command-line entry points: 0 success, 1 runtime
// failure, 2 usage error.
inline constexpr int exit_ok = 0;
inline constexpr int exit_runtime = 1;
inline constexpr int exit_usage = 2;

struct RunConfig {
  std::string method = "lsa-tr";
  std::string energy_path;
  std::string init = "ones";  // ones | zeros | path to a binary PGM
  TrustRegionParams tr;
  std::uint64_t seed = 0;
  int max_iters = 1000;
  int width = 0;   // labeling output dimensions; 0 means n x 1
  int height = 0;
  std::string labeling_out;
  std::string trace_out;
  std::string summary_out;  // empty: summary goes to out
};

// Loads the energy, runs the chosen method, writes labeling/trace/summary.
// Methods: lsa-tr, lsa-tr-l, lsa-aux, lsa-aux-p, icm, ipfp, truncate, brute.
int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Synthesizes a deconvolution instance and writes <prefix>_observed.pgm,
// <prefix>_truth.pgm and <prefix>.energy.
int cmd_make_deconv(int width, int height, double sigma, std::uint64_t seed,
    const ShapeSpec& shape, const std::string& out_prefix,
    std::ostream& out, std::ostream& err);

// Builds the segmentation energy of an image and writes it to out_path.
int cmd_make_repulsion(const std::string& image_path, const RepulsionParams& params,
    const std::string& out_path, std::ostream& out, std::ostream& err);

// Prints the exact energy of a labeling (binary PGM) under an energy file.
int cmd_eval(const std::string& energy_path, const std::string& labeling_path,
    std::ostream& out, std::ostream& err);

}

#endif
