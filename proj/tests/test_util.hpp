#ifndef LSA_TEST_UTIL_HPP
#define LSA_TEST_UTIL_HPP

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "lsa/energy.hpp"
#include "lsa/problems.hpp"

namespace lsa::test {

inline Labeling lab(std::initializer_list<int> bits)
{
  std::vector<std::uint8_t> b;
  b.reserve(bits.size());
  for (int v : bits)
    b.push_back(static_cast<std::uint8_t>(v));
  return Labeling(std::move(b));
}

// Bit p of mask becomes s_p; independent of the enumeration order used by
// brute_force_min.
inline Labeling labeling_from_mask(int n, unsigned long mask)
{
  std::vector<std::uint8_t> b(n);
  for (int p = 0; p < n; ++p)
    b[p] = (mask >> p) & 1u;
  return Labeling(std::move(b));
}

inline Labeling random_labeling(int n, std::uint64_t seed)
{
  std::mt19937_64 gen(seed);
  std::vector<std::uint8_t> b(n);
  for (int p = 0; p < n; ++p)
    b[p] = gen() & 1u;
  return Labeling(std::move(b));
}

// Oracle: re-evaluates the energy in reverse term order with long double
// accumulation, so agreement with eval_energy is a genuine cross-check.
inline double naive_eval(const BinaryEnergy& e, const Labeling& s)
{
  long double acc = 0.0L;
  const auto& pairs = e.pairwise();
  for (auto it = pairs.rbegin(); it != pairs.rend(); ++it)
    acc += static_cast<long double>(it->w) * s[it->p] * s[it->q];
  for (int p = e.num_vars() - 1; p >= 0; --p)
    acc += static_cast<long double>(e.unary()[p]) * s[p];
  acc += e.constant();
  return static_cast<double>(acc);
}

// Oracle: exhaustive minimum with the lexicographic tie rule applied by
// explicit labeling comparison rather than mask order.
inline MinimizeResult exhaustive_min(const BinaryEnergy& e)
{
  const int n = e.num_vars();
  MinimizeResult best;
  best.labeling = labeling_from_mask(n, 0);
  best.energy = eval_energy(e, best.labeling);
  for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
    Labeling s = labeling_from_mask(n, mask);
    const double v = eval_energy(e, s);
    if (v < best.energy) {
      best.energy = v;
      best.labeling = s;
    } else if (v == best.energy && std::lexicographical_compare(
                   s.bits.begin(), s.bits.end(),
                   best.labeling.bits.begin(), best.labeling.bits.end())) {
      best.labeling = s;
    }
  }
  return best;
}

// Oracle: direct evaluation of the deconvolution objective
// sum_p (I_p - (1/9) sum_{q in N_p} s_q)^2 without expanding the square.
inline double deconv_direct(const GrayImage& img, const Labeling& s)
{
  long double total = 0.0L;
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x) {
      long double window = 0.0L;
      for (int dy = -1; dy <= 1; ++dy)
        for (int dx = -1; dx <= 1; ++dx) {
          const int nx = x + dx;
          const int ny = y + dy;
          if (nx >= 0 && nx < img.width && ny >= 0 && ny < img.height)
            window += s[ny * img.width + nx];
        }
      const long double r = img.at(x, y) - window / 9.0L;
      total += r * r;
    }
  return static_cast<double>(total);
}

}

#endif
