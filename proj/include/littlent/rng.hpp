#pragma once

#include <cstdint>

namespace littlent {

// Deterministic splitmix64 generator. Substreams derived from (seed, index)
// make parallel sampling independent of worker scheduling.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  static Rng substream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next_u64();

  // Uniform in [0, 1).
  double next_double();

  // Standard normal via Box-Muller.
  double next_normal();

 private:
  std::uint64_t state_;
};

}  // namespace littlent
