#include "lsa/problems.hpp"

#include <cmath>
#include <random>

#include "lsa/errors.hpp"
#include "lsa/rng.hpp"

namespace lsa {

namespace {

constexpr double pi = 3.14159265358979323846;

void check_image(const GrayImage& img)
{
  if (img.width < 1 || img.height < 1)
    throw dimension_error("image dimensions must be positive");
  if (img.pixels.size() != static_cast<std::size_t>(img.width) * img.height)
    throw dimension_error("pixel count does not match dimensions");
}

// Standard normal deviate from two counter-indexed uniform draws.
double gauss_noise(std::uint64_t seed, std::uint64_t counter)
{
  const double u1 = 1.0 - to_unit_double(hash_combine(seed, 2 * counter));
  const double u2 = to_unit_double(hash_combine(seed, 2 * counter + 1));
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * pi * u2);
}

}

BinaryEnergy build_deconvolution_energy(const GrayImage& img)
{
  check_image(img);
  const int w = img.width;
  const int h = img.height;
  EnergyBuilder b(w * h);
  std::vector<int> window;
  window.reserve(9);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      window.clear();
      for (int dy = -1; dy <= 1; ++dy)
        for (int dx = -1; dx <= 1; ++dx) {
          const int qx = x + dx;
          const int qy = y + dy;
          if (qx >= 0 && qx < w && qy >= 0 && qy < h)
            window.push_back(qy * w + qx);
        }
      const double intensity = img.at(x, y);
      b.add_constant(intensity * intensity);
      for (std::size_t i = 0; i < window.size(); ++i) {
        b.add_unary(window[i], 1.0 / 81.0 - 2.0 * intensity / 9.0);
        for (std::size_t j = i + 1; j < window.size(); ++j)
          b.add_pair(window[i], window[j], 2.0 / 81.0);
      }
    }
  }
  return b.build();
}

DeconvInstance synthesize_deconv_instance(int width, int height, const ShapeSpec& shape,
    double sigma, std::uint64_t seed)
{
  if (width < 1 || height < 1)
    throw dimension_error("image dimensions must be positive");
  if (!(sigma >= 0.0))
    throw parameter_error("sigma must be nonnegative");
  if (!(shape.extent > 0.0))
    throw parameter_error("shape extent must be positive");

  DeconvInstance out;
  out.ground_truth = Labeling::zeros(width * height);
  const double cx = (width - 1) / 2.0;
  const double cy = (height - 1) / 2.0;
  const int min_dim = width < height ? width : height;
  if (shape.kind == ShapeKind::disk) {
    const double radius = shape.extent * min_dim / 2.0;
    for (int y = 0; y < height; ++y)
      for (int x = 0; x < width; ++x)
        if ((x - cx) * (x - cx) + (y - cy) * (y - cy) <= radius * radius)
          out.ground_truth[y * width + x] = 1;
  } else {
    const double half = shape.extent * min_dim / 2.0;
    for (int y = 0; y < height; ++y)
      for (int x = 0; x < width; ++x)
        if (std::abs(x - cx) <= half && std::abs(y - cy) <= half)
          out.ground_truth[y * width + x] = 1;
  }

  out.observed.width = width;
  out.observed.height = height;
  out.observed.pixels.assign(static_cast<std::size_t>(width) * height, 0.0);
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x) {
      int sum = 0;
      for (int dy = -1; dy <= 1; ++dy)
        for (int dx = -1; dx <= 1; ++dx) {
          const int qx = x + dx;
          const int qy = y + dy;
          if (qx >= 0 && qx < width && qy >= 0 && qy < height)
            sum += out.ground_truth[qy * width + qx];
        }
      const std::size_t p = static_cast<std::size_t>(y) * width + x;
      double value = sum / 9.0;
      if (sigma > 0.0)
        value += sigma * gauss_noise(seed, p);
      out.observed.pixels[p] = value;
    }
  return out;
}

BinaryEnergy build_repulsion_energy(const GrayImage& img, const RepulsionParams& params)
{
  check_image(img);
  if (!(params.sigma_app > 0.0))
    throw parameter_error("sigma_app must be positive");
  if (!(params.lambda_reg >= 0.0))
    throw parameter_error("lambda_reg must be nonnegative");

  const int w = img.width;
  const int h = img.height;
  EnergyBuilder b(w * h);
  const double inv_two_var = 1.0 / (2.0 * params.sigma_app * params.sigma_app);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      const double intensity = img.at(x, y);
      const double fg = intensity - params.mu_fg;
      const double bg = intensity - params.mu_bg;
      b.add_unary(y * w + x, fg * fg * inv_two_var - bg * bg * inv_two_var);
    }

  // half stencil: each unordered 16-neighborhood pair visited once
  static constexpr int offsets[8][2] = {
      {1, 0}, {0, 1}, {1, 1}, {-1, 1}, {2, 1}, {-2, 1}, {1, 2}, {-1, 2}};
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      for (const auto& off : offsets) {
        const int qx = x + off[0];
        const int qy = y + off[1];
        if (qx < 0 || qx >= w || qy < 0 || qy >= h)
          continue;
        const double delta = std::abs(img.at(x, y) - img.at(qx, qy));
        const double dist = std::sqrt(double(off[0] * off[0] + off[1] * off[1]));
        const double v = params.lambda_reg * ((params.c - delta) / dist);
        if (v == 0.0)
          continue;
        const int p = y * w + x;
        const int q = qy * w + qx;
        b.add_unary(p, v);
        b.add_unary(q, v);
        b.add_pair(p, q, -2.0 * v);
      }
  return b.build();
}

BinaryEnergy random_energy(int n, double pair_density, double sup_fraction,
    double magnitude, std::uint64_t seed)
{
  if (n < 1)
    throw parameter_error("n must be positive");
  if (!(pair_density >= 0.0 && pair_density <= 1.0))
    throw parameter_error("pair_density must be in [0,1]");
  if (!(sup_fraction >= 0.0 && sup_fraction <= 1.0))
    throw parameter_error("sup_fraction must be in [0,1]");
  if (!(magnitude >= 0.0))
    throw parameter_error("magnitude must be nonnegative");

  std::mt19937_64 gen(seed);
  auto unit = [&gen]() { return to_unit_double(gen()); };

  EnergyBuilder b(n);
  for (int p = 0; p < n; ++p)
    b.add_unary(p, (2.0 * unit() - 1.0) * magnitude);
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      if (unit() >= pair_density)
        continue;
      const bool positive = unit() < sup_fraction;
      const double w = (1.0 - unit()) * magnitude;
      b.add_pair(p, q, positive ? w : -w);
    }
  return b.build();
}

GrayImage gray_from_pgm(const PgmImage& img)
{
  GrayImage out;
  out.width = img.width;
  out.height = img.height;
  out.pixels.resize(img.pixels.size());
  for (std::size_t i = 0; i < img.pixels.size(); ++i)
    out.pixels[i] = img.pixels[i] / static_cast<double>(img.maxval);
  return out;
}

PgmImage pgm_from_gray(const GrayImage& img, int maxval)
{
  check_image(img);
  if (maxval < 1 || maxval > 65535)
    throw parameter_error("maxval must be in [1, 65535]");
  PgmImage out;
  out.width = img.width;
  out.height = img.height;
  out.maxval = maxval;
  out.pixels.resize(img.pixels.size());
  for (std::size_t i = 0; i < img.pixels.size(); ++i) {
    const long scaled = std::lround(img.pixels[i] * maxval);
    out.pixels[i] = static_cast<int>(scaled < 0 ? 0 : (scaled > maxval ? maxval : scaled));
  }
  return out;
}

PgmImage pgm_from_labeling(const Labeling& s, int width, int height)
{
  if (width < 1 || height < 1 || s.size() != width * height)
    throw dimension_error("labeling length does not match dimensions");
  PgmImage out;
  out.width = width;
  out.height = height;
  out.maxval = 1;
  out.pixels.assign(s.bits.begin(), s.bits.end());
  return out;
}

Labeling labeling_from_pgm(const PgmImage& img)
{
  Labeling out = Labeling::zeros(static_cast<int>(img.pixels.size()));
  for (std::size_t i = 0; i < img.pixels.size(); ++i) {
    if (img.pixels[i] == img.maxval)
      out[static_cast<int>(i)] = 1;
    else if (img.pixels[i] != 0)
      throw parse_error("labeling image must contain only 0 and maxval");
  }
  return out;
}

}
