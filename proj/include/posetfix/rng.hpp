#pragma once

#include <cstdint>

namespace posetfix {

// SplitMix64. Fixed algorithm so that generated instances reproduce
// bit-for-bit across implementations; the identifier "splitmix64" is
// written into instance metadata.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  // Independent child stream.
  SplitMix64 split() { return SplitMix64(next()); }

  static constexpr const char* algorithm = "splitmix64";

 private:
  std::uint64_t state_;
};

}  // namespace posetfix
