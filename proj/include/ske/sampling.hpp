#ifndef SKE_SAMPLING_HPP
#define SKE_SAMPLING_HPP

#include <cstdint>
#include <stdexcept>

#include "ske/game.hpp"

namespace ske {

/// Counter-based SplitMix64: output k is a pure function of (seed, k),
/// so any game index can be regenerated without streaming.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  /// The k-th raw output of the stream.
  std::uint64_t at(std::uint64_t k) const {
    std::uint64_t z = seed_ + (k + 1) * golden_gamma;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// The k-th output mapped to [0,1) with 53 bits of precision.
  double unit_at(std::uint64_t k) const {
    return static_cast<double>(at(k) >> 11) * 0x1.0p-53;
  }

 private:
  static constexpr std::uint64_t golden_gamma = 0x9E3779B97F4A7C15ULL;
  std::uint64_t seed_;
};

/// Game `index` of the stream: payoffs a00, a01, a10, a11 drawn from
/// consecutive counters 4*index .. 4*index+3, each uniform on [low, high).
inline SymmetricGamed sample_symmetric_game(const SplitMix64& rng, std::uint64_t index,
                                            double low = 0.0, double high = 1.0) {
  if (!(low < high)) throw std::invalid_argument("sample_symmetric_game: need low < high");
  const std::uint64_t base = 4 * index;
  auto draw = [&](std::uint64_t offset) { return low + rng.unit_at(base + offset) * (high - low); };
  return SymmetricGamed(draw(0), draw(1), draw(2), draw(3));
}

inline SymmetricGamed sample_symmetric_game(std::uint64_t seed, std::uint64_t index,
                                            double low = 0.0, double high = 1.0) {
  return sample_symmetric_game(SplitMix64(seed), index, low, high);
}

}  // namespace ske

#endif  // SKE_SAMPLING_HPP
