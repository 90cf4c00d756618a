#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace lsb {

// Portable deterministic PRNG (splitmix64). Standard-library distributions
// are implementation-defined, so every draw here is spelled out explicitly;
// identical seeds produce identical streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();

  // Uniform in [0, n). n must be > 0. Debiased via rejection sampling.
  std::uint64_t below(std::uint64_t n);

  int range(int lo, int hi); // inclusive bounds
  bool chance_half();

  template <typename T>
  const T& pick(const std::vector<T>& xs) {
    return xs[static_cast<std::size_t>(below(xs.size()))];
  }

  template <typename T>
  void shuffle(std::vector<T>& xs) {
    for (std::size_t i = xs.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(xs[i - 1], xs[j]);
    }
  }

 private:
  std::uint64_t state_;
};

// Finalizer used both for substream derivation and content hashing support.
std::uint64_t mix64(std::uint64_t x);

// Derives an independent stream seed from (seed, slot). Used for
// benchmark-slot seeds and per-scenario question streams, so regenerating
// from a recorded seed reproduces the exact artifacts.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t slot);

// FNV-1a over bytes; stable content ids for scenarios/questions/manifests.
std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t x);

} // namespace lsb
