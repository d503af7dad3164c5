#ifndef LSA_PROBLEMS_HPP
#define LSA_PROBLEMS_HPP

#include <cstdint>
#include <vector>

#include "lsa/energy.hpp"
#include "lsa/pgm.hpp"

namespace lsa {

// Grayscale intensities, row-major, nominally in [0,1].
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<double> pixels;

  double at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
};

struct RepulsionParams {
  double mu_fg = 0.4;
  double mu_bg = 0.6;
  double sigma_app = 0.2;
  double lambda_reg = 100.0;
  double c = 0.06;
};

enum class ShapeKind { disk, rectangle };

// Centered figure whose diameter (disk) or side (rectangle) covers extent
// times the smaller image dimension.
struct ShapeSpec {
  ShapeKind kind = ShapeKind::disk;
  double extent = 0.5;
};

// Binary deconvolution energy
//
//   E(S) = sum_p (I_p - (1/9) * sum_{q in N_p} s_q)^2
//
// with N_p the 3x3 window around p clipped at the borders and the divisor
// fixed at 9. Expanding the square gives constant I_p^2, unary
// 1/81 - 2*I_p/9 per window member, and +2/81 per unordered window pair, so
// every pairwise interaction is supermodular.
BinaryEnergy build_deconvolution_energy(const GrayImage& img);

struct DeconvInstance {
  GrayImage observed;
  Labeling ground_truth;
};

// Binary shape raster blurred by the same clipped 3x3/9 filter plus seeded
// Gaussian noise of standard deviation sigma. Deterministic per seed.
DeconvInstance synthesize_deconv_instance(int width, int height, const ShapeSpec& shape,
    double sigma, std::uint64_t seed);

// Appearance unaries (foreground minus background Gaussian NLL) plus Potts
// terms v*|s_p - s_q| over the 16-neighborhood with
// v = lambda_reg * (c - |I_p - I_q|) / dist(p,q). Similar neighbors attract
// (submodular pair), dissimilar ones repulse (supermodular pair).
BinaryEnergy build_repulsion_energy(const GrayImage& img, const RepulsionParams& params);

// Seeded test instance: unaries uniform in (-magnitude, magnitude); each of
// the n*(n-1)/2 pairs is present with probability pair_density, supermodular
// with probability sup_fraction, with weight magnitude in (0, magnitude].
BinaryEnergy random_energy(int n, double pair_density, double sup_fraction,
    double magnitude, std::uint64_t seed);

GrayImage gray_from_pgm(const PgmImage& img);
PgmImage pgm_from_gray(const GrayImage& img, int maxval);
PgmImage pgm_from_labeling(const Labeling& s, int width, int height);

// Requires a binary image: every pixel 0 or maxval; maxval maps to label 1.
Labeling labeling_from_pgm(const PgmImage& img);

}

#endif
