#pragma once

#include <cstdint>
#include <random>

namespace optpath {

// splitmix64; used to whiten (seed, counter) pairs into engine seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent substream for (root seed, stream index). One stream per sampled
// path keeps parallel and serial runs byte-identical for a fixed root seed.
inline std::mt19937_64 substream(std::uint64_t root_seed, std::uint64_t stream) {
  std::uint64_t s = splitmix64(root_seed ^ splitmix64(stream + 1));
  return std::mt19937_64(s);
}

}  // namespace optpath
