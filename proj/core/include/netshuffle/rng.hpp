#pragma once

#include <cstdint>
#include <random>

namespace netshuffle {

// splitmix64 finalizer; good avalanche for seed derivation.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Derives an independent engine from (master, tag, index). Used to give
// every client / trial / purpose its own stream so results are a pure
// function of the master seed regardless of execution order.
inline std::mt19937_64 substream(std::uint64_t master, std::uint64_t tag,
                                 std::uint64_t index = 0) {
  return std::mt19937_64(mix64(mix64(master ^ mix64(tag)) ^ mix64(index)));
}

}  // namespace netshuffle
