#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <string_view>
#include <vector>

namespace qtanner {

// Deterministic, platform-independent RNG (xoshiro256** seeded via splitmix64).
// std::uniform_int_distribution is implementation-defined, so bounded draws
// are done by rejection here; every published estimate records its seed and
// must replay bit-identically on any platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& s : state_) s = splitmix64(x);
  }

  // Independent stream for (seed, index) pairs: per-trial and per-candidate
  // streams never overlap by construction.
  static Rng derive(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t x = seed ^ (0x9e3779b97f4a7c15ULL + index);
    std::uint64_t mixed = splitmix64(x);
    return Rng(mixed ^ (index * 0xbf58476d1ce4e5b9ULL));
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform in [0, bound), bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  bool coin() { return next() >> 63; }

  // Fisher-Yates; result[i] is the source index placed at position i.
  std::vector<std::uint32_t> permutation(std::size_t n) {
    std::vector<std::uint32_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    for (std::size_t i = n; i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(p[i - 1], p[j]);
    }
    return p;
  }

private:
  static std::uint64_t splitmix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  static std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

  std::array<std::uint64_t, 4> state_{};
};

// FNV-1a, used for stable cross-platform content keys (spec hashes).
inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace qtanner
