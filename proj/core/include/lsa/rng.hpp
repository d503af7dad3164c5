#ifndef LSA_RNG_HPP
#define LSA_RNG_HPP

#include <cstdint>

namespace lsa {

// splitmix64 finalizer; used as a counter-based generator so that draws are a
// pure function of (seed, counters) and reproducible across platforms.
inline std::uint64_t mix64(std::uint64_t x)
{
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::uint64_t hash_combine(std::uint64_t a, std::uint64_t b)
{
  return mix64(mix64(a) ^ b);
}

/// Uniform double in [0, 1) from 53 random bits.
inline double to_unit_double(std::uint64_t bits)
{
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}

#endif
