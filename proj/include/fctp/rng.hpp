#ifndef FCTP_RNG_HPP
#define FCTP_RNG_HPP

// Deterministic 64-bit generator (splitmix64). The standard <random>
// distributions are implementation-defined, so everything that must be
// reproducible across toolchains draws through this instead.

#include <cstdint>
#include <string_view>

namespace fctp {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [0, n), modulo-rejection so every index is equally likely.
  std::uint64_t next_index(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
      v = next_u64();
    } while (v >= limit);
    return v % n;
  }

 private:
  std::uint64_t state_;
};

// FNV-1a over a byte string; stable across platforms, used to derive
// per-trial seeds from (base seed, instance id, variant, trial).
inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace fctp

#endif  // FCTP_RNG_HPP
