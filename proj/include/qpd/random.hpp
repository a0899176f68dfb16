#pragma once

#include <cstdint>

namespace qpd {

// splitmix64 finalizer; the one avalanche mixer used for all stream and
// counter derivation.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

// Counter-based generator: draw k of stream (seed, stream_index) is a pure
// function of (seed, stream_index, k), so identical triples give identical
// output across runs and thread counts. No platform entropy is consulted.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t stream_index = 0)
      : key_(mix64(mix64(seed) ^ mix64(~stream_index))),
        seed_(seed),
        stream_index_(stream_index) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_index() const { return stream_index_; }

  // Independent substream; typically indexed by trial number.
  RandomStream substream(std::uint64_t index) const {
    return RandomStream(seed_, mix64(stream_index_ ^ mix64(index)));
  }

  std::uint64_t next_u64() { return mix64(key_ ^ mix64(counter_++)); }

  // Uniform in [0, 1), 53 significant bits.
  double next_uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t key_;
  std::uint64_t seed_;
  std::uint64_t stream_index_;
  std::uint64_t counter_ = 0;
};

}  // namespace qpd
