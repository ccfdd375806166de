#pragma once

#include <cstdint>
#include <random>

namespace hmra {

// splitmix64 mixing step; used to derive independent substreams from a user
// seed so that per-item generation is order- and thread-count-independent.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Engine for substream `stream` of `seed`. Distinct (seed, stream) pairs give
// statistically independent engines.
inline std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream = 0) {
  std::uint64_t s = splitmix64(seed ^ splitmix64(stream + 0x51ed2701a3c5e0f7ULL));
  std::seed_seq seq{static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(s >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(seed)};
  return std::mt19937_64(seq);
}

}  // namespace hmra
