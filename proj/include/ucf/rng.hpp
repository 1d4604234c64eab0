#pragma once

#include <cstdint>

namespace ucf {

// Deterministic 64-bit generator (splitmix64 update) used wherever the
// library needs reproducible randomness.  The same seed yields the same
// stream on every platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform draw from [0, n) by rejection: values >= the largest multiple of
  // n below 2^64 are discarded, so no residue is over-represented.
  std::uint64_t uniform_below(std::uint64_t n) {
    std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
      std::uint64_t x = next();
      if (x >= threshold) return x % n;
    }
  }

  // Derives an independent child stream; advances this generator once.
  Rng split() { return Rng(next() ^ 0xA3EC647659359ACDull); }

private:
  std::uint64_t state_;
};

}  // namespace ucf
