#pragma once

#include <cstdint>
#include <random>

namespace lwpa {

struct RngSeed {
  std::uint64_t value = 0x9e3779b97f4a7c15ull;
};

// splitmix64 finalizer; used to decorrelate derived seeds.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Documented splitting rule: child(i) = mix64(root ^ mix64(i+1)).
// Independent streams for parallel replications and pipeline stages.
inline RngSeed derive_seed(RngSeed root, std::uint64_t index) {
  return RngSeed{mix64(root.value ^ mix64(index + 1))};
}

using Rng = std::mt19937_64;

inline Rng make_rng(RngSeed seed) { return Rng(seed.value); }

}  // namespace lwpa
